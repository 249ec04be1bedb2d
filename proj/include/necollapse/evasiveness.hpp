#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "necollapse/complex.hpp"

namespace nec {

struct Witness;
using WitnessPtr = std::shared_ptr<const Witness>;

// Recursive proof that a complex is nonevasive: either the complex is the
// single point `vertex`, or `link` certifies lk(vertex) and `deletion`
// certifies the complex with `vertex` removed. Subtrees may be shared.
struct Witness {
  std::string vertex;
  WitnessPtr link;
  WitnessPtr deletion;

  bool is_point() const { return !link && !deletion; }

  static WitnessPtr point(std::string v);
  static WitnessPtr split(std::string v, WitnessPtr link, WitnessPtr deletion);
};

// Structural (tree) equality.
bool same_witness(const Witness& a, const Witness& b);
// Number of nodes of the tree with shared subtrees counted once per use.
std::size_t witness_tree_size(const Witness& w);

struct SearchBudget {
  std::size_t max_vertices = 16;
  std::size_t max_nodes = 1'000'000;
};

enum class Outcome { found, absent, budget_exceeded };

struct NonevasivenessResult {
  Outcome outcome = Outcome::absent;  // absent means evasive
  WitnessPtr witness;
  std::size_t nodes = 0;
};

NonevasivenessResult is_nonevasive(const SimplicialComplex& x, const SearchBudget& budget = {});

// Replays the recursion; false on any mismatch. The void complex has no
// witness.
bool verify_witness(const SimplicialComplex& x, const Witness& w);
bool verify_witness(const MaybeComplex& x, const Witness& w);

// Vertex-removal proof of X ↘NE Y: removing `removed` in order, each with a
// nonevasive link certified by the matching entry of `witnesses`.
struct NECertificate {
  std::vector<std::string> removed;
  std::vector<WitnessPtr> witnesses;
};

bool verify_ne_certificate(const SimplicialComplex& from, const SimplicialComplex& to, const NECertificate& cert);

struct ReductionSearchResult {
  Outcome outcome = Outcome::absent;
  std::optional<NECertificate> certificate;
  std::size_t nodes = 0;
};

// Depth-first search over removal orders of V(from) \ V(to). Throws
// InputError unless `to` is the induced subcomplex of `from` on V(to).
ReductionSearchResult search_ne_reduction(const SimplicialComplex& from, const SimplicialComplex& to,
                                          const SearchBudget& budget = {});

// Witness for a cone with the given apex: non-apex vertices are removed in
// label order.
WitnessPtr cone_witness(const SimplicialComplex& cone, std::string_view apex);

// Witness for X * Y from a witness for X.
WitnessPtr join_witness(const SimplicialComplex& x, const WitnessPtr& w, const SimplicialComplex& y);

// Rewrites every point leaf p of `w` with `cone_over(p)`; split nodes are
// kept. This is the witness transport lk_{X*Y} v = (lk_X v) * Y.
WitnessPtr map_point_leaves(const WitnessPtr& w, const std::function<WitnessPtr(const std::string&)>& cone_over);

// From a certificate for X1 ↘NE X2, a certificate for X1 * Y ↘NE X2 * Y.
NECertificate lift_certificate_over_join(const SimplicialComplex& x1, const SimplicialComplex& x2,
                                         const NECertificate& cert, const SimplicialComplex& y);

// Merges A ↘NE B ↗NE C into A ↗NE D ↘NE C.
struct CommonExpansion {
  SimplicialComplex expansion;
  NECertificate to_c;  // D ↘NE C, removes V(A) \ V(B)
  NECertificate to_a;  // D ↘NE A, removes V(C) \ V(B)
};
CommonExpansion common_expansion(const SimplicialComplex& a, const SimplicialComplex& b, const SimplicialComplex& c,
                                 const NECertificate& cert_ab, const NECertificate& cert_cb);

// Exhaustive nonevasiveness search over facet lists in one vertex universe.
// The memo is keyed by the exact facet list and survives across calls, so
// one instance can serve many related queries.
class NonevasivenessSearch {
 public:
  NonevasivenessSearch(std::span<const std::string> universe, SearchBudget budget);

  // nullptr for evasive; throws BudgetExhausted past max_nodes.
  WitnessPtr solve(const FacetList& f);
  std::size_t nodes() const { return nodes_; }

  struct BudgetExhausted {};

 private:
  std::span<const std::string> universe_;
  SearchBudget budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<FacetList, WitnessPtr, facets::Hash> memo_;
};

// Universe-level verifiers shared by the collapse and reduction modules.
bool verify_witness_over(std::span<const std::string> universe, const FacetList& f, const Witness& w);
bool verify_certificate_over(std::span<const std::string> universe, const FacetList& from, const FacetList& to,
                             const NECertificate& cert);
WitnessPtr cone_witness_over(std::span<const std::string> universe, const FacetList& f, unsigned apex);

// ---- ≃NE explorer -------------------------------------------------------

enum class PairRelation {
  equivalent,            // a zigzag of NE-reductions was found
  distinct_by_homology,  // GF(2) Betti numbers differ, so not even homotopy equivalent
  not_shown,             // exhaustive reduction search found no common target
  undecided              // search budget ran out
};

struct NEClassification {
  // class_of[i] is the smallest index in the class of complex i.
  std::vector<std::size_t> class_of;
  // relation[i][j] for i != j.
  std::vector<std::vector<PairRelation>> relation;
  // Reduction search hit its budget for complex i.
  std::vector<bool> truncated;
};

// Relates two complexes when their sets of reachable NE-reductions share a
// complex up to isomorphism; by the zigzag argument they then have a common
// NE-expansion. Never asserts NE-inequivalence beyond homology.
NEClassification classify_ne_equivalence(std::span<const SimplicialComplex> family, const SearchBudget& budget = {});

// Isomorphism-invariant key: minimum facet list over all vertex
// permutations. Limited to 8 vertices.
FacetList canonical_form(const FacetList& f, unsigned num_vertices);

}  // namespace nec
