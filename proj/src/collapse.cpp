#include "necollapse/collapse.hpp"

#include <algorithm>
#include <unordered_set>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec {

bool lex_less(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    const unsigned la = bits::lowest(a);
    const unsigned lb = bits::lowest(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

namespace {

bool pair_less(const ElementaryCollapse& x, const ElementaryCollapse& y) {
  if (x.free_face != y.free_face) return lex_less(x.free_face, y.free_face);
  return lex_less(x.coface, y.coface);
}

std::vector<ElementaryCollapse> free_pairs_of(const FacetList& f) {
  std::vector<ElementaryCollapse> out;
  for (VertexSet sigma : f) {
    if (bits::count(sigma) < 2) continue;
    bits::for_each(sigma, [&](unsigned v) {
      const VertexSet tau = sigma & ~bits::bit(v);
      bool shared = false;
      for (VertexSet other : f) {
        if (other != sigma && bits::subset(tau, other)) {
          shared = true;
          break;
        }
      }
      if (!shared) out.push_back({tau, sigma});
    });
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

// Face set under replay: sorted faces with tombstones.
class FaceState {
 public:
  explicit FaceState(const FacetList& f) : faces_(facets::faces(f)), alive_(faces_.size(), true), live_(faces_.size()) {}

  bool contains(VertexSet s) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
    return it != faces_.end() && *it == s && alive_[static_cast<std::size_t>(it - faces_.begin())];
  }

  void erase(VertexSet s) {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
    alive_[static_cast<std::size_t>(it - faces_.begin())] = false;
    --live_;
  }

  // Checks the pair is an elementary collapse of the current complex.
  bool is_free(ElementaryCollapse step, VertexSet universe) const {
    const VertexSet tau = step.free_face;
    const VertexSet sigma = step.coface;
    if (tau == 0 || !bits::subset(tau, sigma) || bits::count(sigma) != bits::count(tau) + 1) return false;
    if (!contains(tau) || !contains(sigma)) return false;
    // Any proper coface of tau contains some tau + u; only sigma may exist.
    for (VertexSet rest = universe & ~tau; rest != 0; rest &= rest - 1) {
      const VertexSet up = tau | bits::bit(bits::lowest(rest));
      if (up != sigma && contains(up)) return false;
    }
    return true;
  }

  std::vector<VertexSet> alive_faces() const {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (alive_[i]) out.push_back(faces_[i]);
    }
    return out;
  }

 private:
  std::vector<VertexSet> faces_;
  std::vector<bool> alive_;
  std::size_t live_;
};

std::optional<unsigned> locate(std::span<const std::string> universe, std::string_view label) {
  auto it = std::lower_bound(universe.begin(), universe.end(), label);
  if (it == universe.end() || *it != label) return std::nullopt;
  return static_cast<unsigned>(it - universe.begin());
}

// Collapses f onto a single vertex following w; returns that vertex.
std::optional<unsigned> compile_to_point(std::span<const std::string> universe, const FacetList& f,
                                         const Witness& w, std::vector<ElementaryCollapse>& out) {
  const auto v = locate(universe, w.vertex);
  if (!v) return std::nullopt;
  if (w.is_point()) {
    if (!facets::is_point(f) || f[0] != bits::bit(*v)) return std::nullopt;
    return v;
  }
  if (!w.link || !w.deletion) return std::nullopt;
  if (!collapse_detail::compile_vertex(universe, f, *v, *w.link, out)) return std::nullopt;
  return compile_to_point(universe, facets::remove_vertex(f, *v), *w.deletion, out);
}

}  // namespace

namespace collapse_detail {

FacetList apply(const FacetList& f, ElementaryCollapse step) {
  FacetList out;
  for (VertexSet x : f) {
    if (x != step.coface) out.push_back(x);
  }
  bits::for_each(step.coface, [&](unsigned u) {
    const VertexSet face = step.coface & ~bits::bit(u);
    if (face != step.free_face && face != 0) out.push_back(face);
  });
  return facets::normalize(std::move(out));
}

bool compile_vertex(std::span<const std::string> universe, const FacetList& f, unsigned v, const Witness& w,
                    std::vector<ElementaryCollapse>& out) {
  const VertexSet support = facets::support(f);
  if (!bits::test(support, v) || bits::count(support) < 2) return false;
  const FacetList l = facets::link(f, v);
  if (l.empty()) return false;
  std::vector<ElementaryCollapse> inner;
  const auto last = compile_to_point(universe, l, w, inner);
  if (!last) return false;
  const VertexSet vb = bits::bit(v);
  for (const auto& step : inner) out.push_back({step.free_face | vb, step.coface | vb});
  out.push_back({vb, vb | bits::bit(*last)});
  return true;
}

bool replay(std::span<const std::string> universe, const FacetList& from, const FacetList& to,
            const std::vector<ElementaryCollapse>& steps) {
  const VertexSet all = bits::first(static_cast<unsigned>(universe.size()));
  FaceState state(from);
  for (const auto& step : steps) {
    if (!state.is_free(step, all)) return false;
    state.erase(step.free_face);
    state.erase(step.coface);
  }
  return state.alive_faces() == facets::faces(to);
}

}  // namespace collapse_detail

std::vector<ElementaryCollapse> free_pairs(const SimplicialComplex& x) { return free_pairs_of(x.facets()); }

SimplicialComplex apply_collapse(const SimplicialComplex& x, ElementaryCollapse step) {
  FaceState state(x.facets());
  if (!state.is_free(step, bits::first(static_cast<unsigned>(x.num_vertices())))) {
    throw InputError("collapse: pair is not a free face with its unique coface");
  }
  return SimplicialComplex::from_masks(x.vertices(), collapse_detail::apply(x.facets(), step));
}

bool verify_collapse(const SimplicialComplex& from, const SimplicialComplex& to, const CollapseSequence& seq) {
  // Re-express the steps over from's vertices.
  std::vector<unsigned> pos(seq.universe.size());
  VertexSet known = 0;
  for (std::size_t i = 0; i < seq.universe.size(); ++i) {
    if (auto p = from.find(seq.universe[i])) {
      pos[i] = *p;
      known |= bits::bit(static_cast<unsigned>(i));
    }
  }
  std::vector<ElementaryCollapse> steps;
  steps.reserve(seq.steps.size());
  for (const auto& s : seq.steps) {
    if (seq.universe.size() < 64 && ((s.coface | s.free_face) >> seq.universe.size()) != 0) return false;
    if (!bits::subset(s.coface | s.free_face, known)) return false;
    ElementaryCollapse mapped;
    bits::for_each(s.free_face, [&](unsigned i) { mapped.free_face |= bits::bit(pos[i]); });
    bits::for_each(s.coface, [&](unsigned i) { mapped.coface |= bits::bit(pos[i]); });
    steps.push_back(mapped);
  }
  const auto target = to.facets_over(from.vertices());
  if (!target) return false;
  return collapse_detail::replay(from.vertices(), from.facets(), *target, steps);
}

CollapseSequence witness_to_vertex_collapse(const SimplicialComplex& x, std::string_view v, const Witness& w) {
  CollapseSequence seq{x.vertices(), {}};
  if (!collapse_detail::compile_vertex(x.vertices(), x.facets(), x.index_of(v), w, seq.steps)) {
    throw InputError("vertex collapse: witness does not match the link of '" + std::string(v) + "'");
  }
  return seq;
}

CollapseSequence certificate_to_collapse(const SimplicialComplex& x, const NECertificate& cert) {
  if (cert.removed.size() != cert.witnesses.size()) throw InputError("certificate: removal and witness counts differ");
  CollapseSequence seq{x.vertices(), {}};
  FacetList current = x.facets();
  for (std::size_t i = 0; i < cert.removed.size(); ++i) {
    const auto v = locate(x.vertices(), cert.removed[i]);
    if (!v || !cert.witnesses[i] ||
        !collapse_detail::compile_vertex(x.vertices(), current, *v, *cert.witnesses[i], seq.steps)) {
      throw InputError("certificate: step " + std::to_string(i) + " does not verify");
    }
    current = facets::remove_vertex(current, *v);
  }
  return seq;
}

namespace {

class CollapseSearch {
 public:
  CollapseSearch(const FacetList& target, bool to_point, const SearchBudget& budget)
      : target_(target), target_faces_(facets::faces(target)), to_point_(to_point), budget_(budget) {}

  bool run(const FacetList& current, std::vector<ElementaryCollapse>& path) {
    if (to_point_ ? facets::is_point(current) : current == target_) return true;
    if (failed_.contains(current)) return false;
    if (++nodes_ > budget_.max_nodes) throw NonevasivenessSearch::BudgetExhausted{};
    for (const auto& step : free_pairs_of(current)) {
      if (!to_point_ && std::binary_search(target_faces_.begin(), target_faces_.end(), step.free_face)) continue;
      path.push_back(step);
      if (run(collapse_detail::apply(current, step), path)) return true;
      path.pop_back();
    }
    failed_.insert(current);
    return false;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  FacetList target_;
  std::vector<VertexSet> target_faces_;
  bool to_point_;
  SearchBudget budget_;
  std::size_t nodes_ = 0;
  std::unordered_set<FacetList, facets::Hash> failed_;
};

CollapseSearchResult run_search(const SimplicialComplex& from, const FacetList& target, bool to_point,
                                const SearchBudget& budget) {
  CollapseSearchResult r;
  if (from.num_vertices() > budget.max_vertices) {
    r.outcome = Outcome::budget_exceeded;
    return r;
  }
  CollapseSearch search(target, to_point, budget);
  std::vector<ElementaryCollapse> path;
  try {
    if (search.run(from.facets(), path)) {
      r.outcome = Outcome::found;
      r.sequence = CollapseSequence{from.vertices(), std::move(path)};
    }
  } catch (const NonevasivenessSearch::BudgetExhausted&) {
    r.outcome = Outcome::budget_exceeded;
  }
  r.nodes = search.nodes();
  return r;
}

}  // namespace

CollapseSearchResult search_collapse(const SimplicialComplex& from, const SimplicialComplex& to,
                                     const SearchBudget& budget) {
  const auto target = to.facets_over(from.vertices());
  CollapseSearchResult r;
  if (!target) return r;
  for (VertexSet f : *target) {
    if (!from.contains_face(f)) return r;
  }
  // Collapses preserve the Euler characteristic.
  if (reduced_euler(from) != reduced_euler(to)) return r;
  return run_search(from, *target, false, budget);
}

CollapseSearchResult search_collapse_to_point(const SimplicialComplex& from, const SearchBudget& budget) {
  if (reduced_euler(from) != 0) return {};
  return run_search(from, {}, true, budget);
}

}  // namespace nec
