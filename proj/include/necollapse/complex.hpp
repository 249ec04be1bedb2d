#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "necollapse/poset.hpp"

namespace nec {

// Set of vertices as a bit mask over a sorted label universe.
using VertexSet = std::uint64_t;
using FacetList = boost::container::small_vector<VertexSet, 12>;

inline constexpr std::size_t kMaxVertices = 64;

// Mask-level operations on facet lists over a fixed vertex universe. A facet
// list is kept normalized: sorted ascending, no duplicates, no facet inside
// another. The empty list is the void complex.
namespace facets {

FacetList normalize(FacetList f);
VertexSet support(const FacetList& f);
FacetList link(const FacetList& f, unsigned v);
FacetList remove_vertex(const FacetList& f, unsigned v);
FacetList induced(const FacetList& f, VertexSet keep);
bool contains_face(const FacetList& f, VertexSet face);
// Vertex lying in every facet, lowest index first.
std::optional<unsigned> apex(const FacetList& f);
// All nonempty faces, sorted ascending by mask.
std::vector<VertexSet> faces(const FacetList& f);
bool is_point(const FacetList& f);

struct Hash {
  std::size_t operator()(const FacetList& f) const noexcept;
};

}  // namespace facets

// Finite abstract simplicial complex stored by its maximal faces.
//
// Vertex labels are kept sorted; facet masks index into that list. Every
// vertex lies in some facet, so the void complex (no vertices) is not a
// value of this type; operations that can produce it return MaybeComplex.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

  // Facets given as masks over a sorted universe. Unused universe labels are
  // dropped. Throws InputError if the result would be void.
  static SimplicialComplex from_masks(std::span<const std::string> universe, const FacetList& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const FacetList& facets() const { return facets_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  int dimension() const;

  std::optional<unsigned> find(std::string_view label) const;
  unsigned index_of(std::string_view label) const;
  bool has_vertex(std::string_view label) const { return find(label).has_value(); }

  VertexSet mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;
  std::vector<std::vector<std::string>> facet_labels() const;

  // This complex's facets re-expressed over a sorted universe containing all
  // of its vertices; nullopt if some vertex is missing from the universe.
  std::optional<FacetList> facets_over(std::span<const std::string> universe) const;

  bool contains_face(VertexSet face) const { return facets::contains_face(facets_, face); }
  std::vector<VertexSet> faces() const { return facets::faces(facets_); }
  std::size_t face_count() const;
  // f[k] = number of k-dimensional faces.
  std::vector<std::size_t> f_vector() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<std::string> vertices_;
  FacetList facets_;
};

// The void complex is std::nullopt.
using MaybeComplex = std::optional<SimplicialComplex>;

// Complex of chains of P. Throws InputError for the empty poset.
SimplicialComplex order_complex(const Poset& p);
// Order complex of the induced subposet on `keep`; void when keep is empty.
MaybeComplex order_complex(const Poset& p, ElementSet keep);
// Maximal chains of the induced subposet on `keep`, as masks over p's elements.
FacetList maximal_chains(const Poset& p, ElementSet keep);

MaybeComplex link(const SimplicialComplex& x, std::string_view v);
// Induced complex on the remaining vertices; throws on the last vertex.
SimplicialComplex delete_vertex(const SimplicialComplex& x, std::string_view v);
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::span<const std::string> keep);
// Requires disjoint vertex labels.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);
MaybeComplex join(const MaybeComplex& x, const MaybeComplex& y);
std::optional<std::string> is_cone(const SimplicialComplex& x);

// Sum over faces of (-1)^dim minus one; the void complex gives -1.
long long reduced_euler(const SimplicialComplex& x);
long long reduced_euler(const MaybeComplex& x);

// Betti numbers over GF(2), b_0 .. b_dim.
std::vector<std::size_t> z2_betti(const SimplicialComplex& x);

// Merges two sorted label lists.
std::vector<std::string> merge_labels(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace nec
