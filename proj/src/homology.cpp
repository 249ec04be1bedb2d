#include <algorithm>
#include <unordered_map>

#include "necollapse/bits.hpp"
#include "necollapse/complex.hpp"

namespace nec {

namespace {

using Row = std::vector<std::uint64_t>;

// Rank over GF(2) by Gaussian elimination on packed rows.
std::size_t gf2_rank(std::vector<Row> rows, std::size_t columns) {
  std::size_t rank = 0;
  const std::size_t words = (columns + 63) / 64;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t b = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && (rows[pivot][w] & b) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & b) != 0) {
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::size_t> z2_betti(const SimplicialComplex& x) {
  const int dim = x.dimension();
  std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(dim + 1));
  for (VertexSet s : x.faces()) by_dim[static_cast<std::size_t>(bits::count(s) - 1)].push_back(s);

  // rank of the boundary map from k-faces to (k-1)-faces, k >= 1.
  std::vector<std::size_t> boundary_rank(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    std::unordered_map<VertexSet, std::size_t> index;
    for (std::size_t i = 0; i < by_dim[k - 1].size(); ++i) index.emplace(by_dim[k - 1][i], i);
    const std::size_t columns = by_dim[k - 1].size();
    std::vector<Row> rows;
    rows.reserve(by_dim[k].size());
    for (VertexSet s : by_dim[k]) {
      Row row((columns + 63) / 64, 0);
      bits::for_each(s, [&](unsigned v) {
        const std::size_t c = index.at(s & ~bits::bit(v));
        row[c / 64] |= std::uint64_t{1} << (c % 64);
      });
      rows.push_back(std::move(row));
    }
    boundary_rank[k] = gf2_rank(std::move(rows), columns);
  }

  std::vector<std::size_t> betti(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) {
    betti[k] = by_dim[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  return betti;
}

}  // namespace nec
