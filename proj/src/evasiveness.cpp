#include "necollapse/evasiveness.hpp"

#include <algorithm>
#include <unordered_set>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec {

WitnessPtr Witness::point(std::string v) {
  return std::make_shared<const Witness>(Witness{std::move(v), nullptr, nullptr});
}

WitnessPtr Witness::split(std::string v, WitnessPtr link, WitnessPtr deletion) {
  return std::make_shared<const Witness>(Witness{std::move(v), std::move(link), std::move(deletion)});
}

bool same_witness(const Witness& a, const Witness& b) {
  if (&a == &b) return true;
  if (a.vertex != b.vertex || a.is_point() != b.is_point()) return false;
  if (a.is_point()) return true;
  if (!a.link || !b.link || !a.deletion || !b.deletion) return false;
  return same_witness(*a.link, *b.link) && same_witness(*a.deletion, *b.deletion);
}

std::size_t witness_tree_size(const Witness& w) {
  std::size_t n = 1;
  if (w.link) n += witness_tree_size(*w.link);
  if (w.deletion) n += witness_tree_size(*w.deletion);
  return n;
}

namespace {

std::optional<unsigned> locate(std::span<const std::string> universe, const std::string& label) {
  auto it = std::lower_bound(universe.begin(), universe.end(), label);
  if (it == universe.end() || *it != label) return std::nullopt;
  return static_cast<unsigned>(it - universe.begin());
}

}  // namespace

// ---- search -------------------------------------------------------------

NonevasivenessSearch::NonevasivenessSearch(std::span<const std::string> universe, SearchBudget budget)
    : universe_(universe), budget_(budget) {}

WitnessPtr NonevasivenessSearch::solve(const FacetList& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  if (++nodes_ > budget_.max_nodes) throw BudgetExhausted{};

  WitnessPtr result;
  const VertexSet support = facets::support(f);
  if (facets::is_point(f)) {
    result = Witness::point(universe_[bits::lowest(support)]);
  } else if (auto apex = facets::apex(f)) {
    // Cones always succeed on the first non-apex vertex.
    const unsigned u = bits::lowest(support & ~bits::bit(*apex));
    WitnessPtr wl = solve(facets::link(f, u));
    WitnessPtr wd = solve(facets::remove_vertex(f, u));
    result = Witness::split(universe_[u], std::move(wl), std::move(wd));
  } else {
    for (VertexSet rest = support; rest != 0 && !result; rest &= rest - 1) {
      const unsigned v = bits::lowest(rest);
      FacetList l = facets::link(f, v);
      if (l.empty()) continue;
      WitnessPtr wl = solve(l);
      if (!wl) continue;
      WitnessPtr wd = solve(facets::remove_vertex(f, v));
      if (!wd) continue;
      result = Witness::split(universe_[v], std::move(wl), std::move(wd));
    }
  }
  memo_.emplace(f, result);
  return result;
}

NonevasivenessResult is_nonevasive(const SimplicialComplex& x, const SearchBudget& budget) {
  NonevasivenessResult r;
  if (x.num_vertices() > budget.max_vertices) {
    r.outcome = Outcome::budget_exceeded;
    return r;
  }
  NonevasivenessSearch search(x.vertices(), budget);
  try {
    r.witness = search.solve(x.facets());
    r.outcome = r.witness ? Outcome::found : Outcome::absent;
  } catch (const NonevasivenessSearch::BudgetExhausted&) {
    r.outcome = Outcome::budget_exceeded;
  }
  r.nodes = search.nodes();
  return r;
}

// ---- verification -------------------------------------------------------

bool verify_witness_over(std::span<const std::string> universe, const FacetList& f, const Witness& w) {
  if (f.empty()) return false;
  const auto v = locate(universe, w.vertex);
  if (!v) return false;
  if (w.is_point()) return facets::is_point(f) && f[0] == bits::bit(*v);
  if (!w.link || !w.deletion) return false;
  const VertexSet support = facets::support(f);
  if (!bits::test(support, *v) || bits::count(support) < 2) return false;
  const FacetList l = facets::link(f, *v);
  if (l.empty()) return false;
  return verify_witness_over(universe, l, *w.link) &&
         verify_witness_over(universe, facets::remove_vertex(f, *v), *w.deletion);
}

bool verify_witness(const SimplicialComplex& x, const Witness& w) {
  return verify_witness_over(x.vertices(), x.facets(), w);
}

bool verify_witness(const MaybeComplex& x, const Witness& w) { return x && verify_witness(*x, w); }

bool verify_certificate_over(std::span<const std::string> universe, const FacetList& from, const FacetList& to,
                             const NECertificate& cert) {
  if (cert.removed.size() != cert.witnesses.size()) return false;
  FacetList current = from;
  for (std::size_t i = 0; i < cert.removed.size(); ++i) {
    const auto v = locate(universe, cert.removed[i]);
    if (!v || !cert.witnesses[i]) return false;
    const VertexSet support = facets::support(current);
    if (!bits::test(support, *v) || bits::count(support) < 2) return false;
    const FacetList l = facets::link(current, *v);
    if (l.empty() || !verify_witness_over(universe, l, *cert.witnesses[i])) return false;
    current = facets::remove_vertex(current, *v);
  }
  return current == to;
}

bool verify_ne_certificate(const SimplicialComplex& from, const SimplicialComplex& to, const NECertificate& cert) {
  const auto target = to.facets_over(from.vertices());
  if (!target) return false;
  return verify_certificate_over(from.vertices(), from.facets(), *target, cert);
}

// ---- reduction search ---------------------------------------------------

namespace {

class ReductionSearch {
 public:
  ReductionSearch(const SimplicialComplex& from, VertexSet target, const SearchBudget& budget)
      : from_(from), target_(target), budget_(budget), nonevasive_(from.vertices(), budget) {}

  bool run(VertexSet alive, NECertificate& cert) {
    if (alive == target_) return true;
    if (failed_.contains(alive)) return false;
    if (++nodes_ > budget_.max_nodes) throw NonevasivenessSearch::BudgetExhausted{};
    const FacetList current = facets::induced(from_.facets(), alive);
    for (VertexSet rest = alive & ~target_; rest != 0; rest &= rest - 1) {
      const unsigned v = bits::lowest(rest);
      const FacetList l = facets::link(current, v);
      if (l.empty()) continue;
      WitnessPtr w = nonevasive_.solve(l);
      if (!w) continue;
      cert.removed.push_back(from_.vertices()[v]);
      cert.witnesses.push_back(std::move(w));
      if (run(alive & ~bits::bit(v), cert)) return true;
      cert.removed.pop_back();
      cert.witnesses.pop_back();
    }
    failed_.insert(alive);
    return false;
  }

  std::size_t nodes() const { return nodes_ + nonevasive_.nodes(); }

 private:
  const SimplicialComplex& from_;
  VertexSet target_;
  SearchBudget budget_;
  NonevasivenessSearch nonevasive_;
  std::unordered_set<VertexSet> failed_;
  std::size_t nodes_ = 0;
};

}  // namespace

ReductionSearchResult search_ne_reduction(const SimplicialComplex& from, const SimplicialComplex& to,
                                          const SearchBudget& budget) {
  const auto target = to.facets_over(from.vertices());
  if (!target) throw InputError("ne-search: target has vertices outside the source complex");
  const VertexSet keep = facets::support(*target);
  if (facets::induced(from.facets(), keep) != *target) {
    throw InputError("ne-search: target is not the induced subcomplex of the source on its vertices");
  }
  ReductionSearchResult r;
  if (from.num_vertices() > budget.max_vertices) {
    r.outcome = Outcome::budget_exceeded;
    return r;
  }
  ReductionSearch search(from, keep, budget);
  NECertificate cert;
  try {
    if (search.run(bits::first(static_cast<unsigned>(from.num_vertices())), cert)) {
      r.outcome = Outcome::found;
      r.certificate = std::move(cert);
    }
  } catch (const NonevasivenessSearch::BudgetExhausted&) {
    r.outcome = Outcome::budget_exceeded;
  }
  r.nodes = search.nodes();
  return r;
}

// ---- joins and cones ----------------------------------------------------

namespace {

WitnessPtr cone_rec(std::span<const std::string> universe, const FacetList& f, unsigned apex,
                    std::unordered_map<FacetList, WitnessPtr, facets::Hash>& memo) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  WitnessPtr w;
  if (facets::is_point(f)) {
    w = Witness::point(universe[apex]);
  } else {
    const unsigned u = bits::lowest(facets::support(f) & ~bits::bit(apex));
    w = Witness::split(universe[u], cone_rec(universe, facets::link(f, u), apex, memo),
                       cone_rec(universe, facets::remove_vertex(f, u), apex, memo));
  }
  memo.emplace(f, w);
  return w;
}

}  // namespace

WitnessPtr cone_witness_over(std::span<const std::string> universe, const FacetList& f, unsigned apex) {
  for (VertexSet x : f) {
    if (!bits::test(x, apex)) throw InputError("cone witness: '" + universe[apex] + "' is not an apex");
  }
  if (f.empty()) throw InputError("cone witness: void complex");
  std::unordered_map<FacetList, WitnessPtr, facets::Hash> memo;
  return cone_rec(universe, f, apex, memo);
}

WitnessPtr cone_witness(const SimplicialComplex& cone, std::string_view apex) {
  return cone_witness_over(cone.vertices(), cone.facets(), cone.index_of(apex));
}

WitnessPtr map_point_leaves(const WitnessPtr& w, const std::function<WitnessPtr(const std::string&)>& cone_over) {
  std::unordered_map<const Witness*, WitnessPtr> memo;
  std::function<WitnessPtr(const WitnessPtr&)> rec = [&](const WitnessPtr& node) -> WitnessPtr {
    if (!node) throw InputError("malformed witness: missing child");
    if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
    WitnessPtr out = node->is_point()
                         ? cone_over(node->vertex)
                         : Witness::split(node->vertex, rec(node->link), rec(node->deletion));
    memo.emplace(node.get(), out);
    return out;
  };
  return rec(w);
}

namespace {

void require_disjoint(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) throw InputError("vertex label '" + common.front() + "' occurs in both complexes");
}

// Witnesses for cones p * Y, cached by the apex label.
class ConeOverFactory {
 public:
  explicit ConeOverFactory(const SimplicialComplex& y) : y_(y) {}

  WitnessPtr operator()(const std::string& p) {
    if (auto it = cache_.find(p); it != cache_.end()) return it->second;
    const std::string point_label[] = {p};
    const auto universe = merge_labels(point_label, y_.vertices());
    const unsigned apex = static_cast<unsigned>(std::lower_bound(universe.begin(), universe.end(), p) - universe.begin());
    FacetList f = *y_.facets_over(universe);
    for (auto& x : f) x |= bits::bit(apex);
    WitnessPtr w = cone_witness_over(universe, f, apex);
    cache_.emplace(p, w);
    return w;
  }

 private:
  const SimplicialComplex& y_;
  std::unordered_map<std::string, WitnessPtr> cache_;
};

}  // namespace

WitnessPtr join_witness(const SimplicialComplex& x, const WitnessPtr& w, const SimplicialComplex& y) {
  require_disjoint(x.vertices(), y.vertices());
  if (!w || !verify_witness(x, *w)) throw InputError("join witness: input witness does not verify");
  ConeOverFactory cones(y);
  return map_point_leaves(w, std::ref(cones));
}

NECertificate lift_certificate_over_join(const SimplicialComplex& x1, const SimplicialComplex& x2,
                                         const NECertificate& cert, const SimplicialComplex& y) {
  require_disjoint(x1.vertices(), y.vertices());
  if (!verify_ne_certificate(x1, x2, cert)) throw InputError("lift: certificate does not verify");
  ConeOverFactory cones(y);
  NECertificate out;
  out.removed = cert.removed;
  for (const auto& w : cert.witnesses) out.witnesses.push_back(map_point_leaves(w, std::ref(cones)));

  if (!verify_ne_certificate(join(x1, y), join(x2, y), out)) {
    throw std::logic_error("lifted certificate failed verification");
  }
  return out;
}

CommonExpansion common_expansion(const SimplicialComplex& a, const SimplicialComplex& b, const SimplicialComplex& c,
                                 const NECertificate& cert_ab, const NECertificate& cert_cb) {
  if (!verify_ne_certificate(a, b, cert_ab)) throw PreconditionError("common expansion: A -> B certificate invalid");
  if (!verify_ne_certificate(c, b, cert_cb)) throw PreconditionError("common expansion: C -> B certificate invalid");

  std::vector<std::string> s, t;
  std::set_difference(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                      std::back_inserter(s));
  std::set_difference(c.vertices().begin(), c.vertices().end(), b.vertices().begin(), b.vertices().end(),
                      std::back_inserter(t));
  require_disjoint(s, t);

  const auto universe = merge_labels(a.vertices(), c.vertices());
  if (universe.size() > kMaxVertices) throw InputError("common expansion: too many vertices");
  FacetList f = *a.facets_over(universe);
  const FacetList fc = *c.facets_over(universe);
  f.insert(f.end(), fc.begin(), fc.end());

  CommonExpansion out{SimplicialComplex::from_masks(universe, f), cert_ab, cert_cb};
  if (!verify_ne_certificate(out.expansion, c, out.to_c) || !verify_ne_certificate(out.expansion, a, out.to_a)) {
    throw std::logic_error("common expansion certificates failed verification");
  }
  return out;
}

}  // namespace nec
