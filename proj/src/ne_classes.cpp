#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"
#include "necollapse/evasiveness.hpp"

namespace nec {

namespace {

constexpr unsigned kCanonicalLimit = 8;

std::vector<std::size_t> trimmed_betti(const SimplicialComplex& x) {
  auto b = z2_betti(x);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

struct Reachable {
  std::set<FacetList> forms;
  bool truncated = false;
};

// Every induced subcomplex reachable by NE-reductions, up to isomorphism.
Reachable reachable_forms(const SimplicialComplex& x, const SearchBudget& budget) {
  Reachable r;
  if (x.num_vertices() > budget.max_vertices) {
    r.truncated = true;
    return r;
  }
  NonevasivenessSearch search(x.vertices(), budget);
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> stack{bits::first(static_cast<unsigned>(x.num_vertices()))};
  std::size_t states = 0;
  try {
    while (!stack.empty()) {
      const VertexSet alive = stack.back();
      stack.pop_back();
      if (!seen.insert(alive).second) continue;
      if (++states > budget.max_nodes) throw NonevasivenessSearch::BudgetExhausted{};
      const FacetList current = facets::induced(x.facets(), alive);
      const auto n = static_cast<unsigned>(bits::count(alive));
      if (n <= kCanonicalLimit) {
        FacetList local;
        for (VertexSet f : current) local.push_back(compress(f, alive));
        r.forms.insert(canonical_form(local, n));
      } else {
        r.truncated = true;
      }
      if (n < 2) continue;
      for (VertexSet rest = alive; rest != 0; rest &= rest - 1) {
        const unsigned v = bits::lowest(rest);
        const FacetList l = facets::link(current, v);
        if (!l.empty() && search.solve(l)) stack.push_back(alive & ~bits::bit(v));
      }
    }
  } catch (const NonevasivenessSearch::BudgetExhausted&) {
    r.truncated = true;
  }
  return r;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

FacetList canonical_form(const FacetList& f, unsigned num_vertices) {
  if (num_vertices > kCanonicalLimit) throw InputError("canonical form limited to 8 vertices");
  std::vector<unsigned> perm(num_vertices);
  std::iota(perm.begin(), perm.end(), 0u);
  FacetList best;
  bool first = true;
  do {
    FacetList image;
    for (VertexSet x : f) {
      VertexSet m = 0;
      bits::for_each(x, [&](unsigned v) { m |= bits::bit(perm[v]); });
      image.push_back(m);
    }
    std::sort(image.begin(), image.end());
    if (first || image < best) {
      best = std::move(image);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

NEClassification classify_ne_equivalence(std::span<const SimplicialComplex> family, const SearchBudget& budget) {
  const std::size_t n = family.size();
  std::vector<Reachable> reach;
  reach.reserve(n);
  for (const auto& x : family) reach.push_back(reachable_forms(x, budget));

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = reach[i].forms;
      const auto& b = reach[j].forms;
      const bool meet = std::any_of(a.begin(), a.end(), [&](const FacetList& f) { return b.contains(f); });
      if (meet) parent[find_root(parent, i)] = find_root(parent, j);
    }
  }

  NEClassification out;
  out.class_of.resize(n);
  std::vector<std::size_t> smallest(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& s = smallest[find_root(parent, i)];
    s = std::min(s, i);
  }
  for (std::size_t i = 0; i < n; ++i) out.class_of[i] = smallest[find_root(parent, i)];

  std::vector<std::vector<std::size_t>> betti;
  for (const auto& x : family) betti.push_back(trimmed_betti(x));
  out.truncated.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.truncated[i] = reach[i].truncated;

  out.relation.assign(n, std::vector<PairRelation>(n, PairRelation::equivalent));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || out.class_of[i] == out.class_of[j]) continue;
      if (betti[i] != betti[j]) {
        out.relation[i][j] = PairRelation::distinct_by_homology;
      } else if (reach[i].truncated || reach[j].truncated) {
        out.relation[i][j] = PairRelation::undecided;
      } else {
        out.relation[i][j] = PairRelation::not_shown;
      }
    }
  }
  return out;
}

}  // namespace nec
