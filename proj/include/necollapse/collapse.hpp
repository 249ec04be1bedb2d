#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "necollapse/complex.hpp"
#include "necollapse/evasiveness.hpp"

namespace nec {

// Removal of a free face together with its unique proper coface. Masks index
// the vertex universe of the owning sequence (or complex).
struct ElementaryCollapse {
  VertexSet free_face = 0;
  VertexSet coface = 0;

  bool operator==(const ElementaryCollapse&) const = default;
};

struct CollapseSequence {
  std::vector<std::string> universe;  // sorted vertex labels
  std::vector<ElementaryCollapse> steps;
};

// Lexicographic order of label lists, computed on masks over a sorted universe.
bool lex_less(VertexSet a, VertexSet b);

// Free pairs of x, masks over x.vertices(), sorted lexicographically by
// (free face, coface).
std::vector<ElementaryCollapse> free_pairs(const SimplicialComplex& x);

// Throws InputError if the pair is not free in x. Masks over x.vertices().
SimplicialComplex apply_collapse(const SimplicialComplex& x, ElementaryCollapse step);

bool verify_collapse(const SimplicialComplex& from, const SimplicialComplex& to, const CollapseSequence& seq);

// Collapses away the star of v, given a nonevasiveness witness for its link.
CollapseSequence witness_to_vertex_collapse(const SimplicialComplex& x, std::string_view v, const Witness& w);

// Concatenates the vertex collapses along the certificate's removal order.
CollapseSequence certificate_to_collapse(const SimplicialComplex& x, const NECertificate& cert);

struct CollapseSearchResult {
  Outcome outcome = Outcome::absent;
  std::optional<CollapseSequence> sequence;
  std::size_t nodes = 0;
};

CollapseSearchResult search_collapse(const SimplicialComplex& from, const SimplicialComplex& to,
                                     const SearchBudget& budget = {});
// Collapse onto any single vertex.
CollapseSearchResult search_collapse_to_point(const SimplicialComplex& from, const SearchBudget& budget = {});

// Universe-level pieces used by the reduction engine.
namespace collapse_detail {

FacetList apply(const FacetList& f, ElementaryCollapse step);
// Appends the steps collapsing f onto f \ v; returns false on witness mismatch.
bool compile_vertex(std::span<const std::string> universe, const FacetList& f, unsigned v, const Witness& w,
                    std::vector<ElementaryCollapse>& out);
bool replay(std::span<const std::string> universe, const FacetList& from, const FacetList& to,
            const std::vector<ElementaryCollapse>& steps);

}  // namespace collapse_detail

}  // namespace nec
