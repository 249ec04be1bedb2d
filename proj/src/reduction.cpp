#include "necollapse/reduction.hpp"

#include <unordered_map>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec {

namespace {

// Poset read in one direction; the dual view swaps below and above, which
// leaves every order complex unchanged.
struct OrientedPoset {
  const Poset& p;
  bool dual;

  ElementSet down(Element x) const { return dual ? p.above(x) : p.below(x); }
  ElementSet up(Element x) const { return dual ? p.below(x) : p.above(x); }
};

// Witness for Δ(S) where S has an element `apex` comparable to all of S:
// non-apex elements are removed in label order.
class ConeWitnesses {
 public:
  explicit ConeWitnesses(const Poset& p) : p_(p) {}

  WitnessPtr build(ElementSet s, Element apex) {
    memo_.clear();
    apex_ = apex;
    return rec(s);
  }

 private:
  WitnessPtr rec(ElementSet s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    WitnessPtr w;
    if (s == bits::bit(apex_)) {
      w = Witness::point(p_.label(apex_));
    } else {
      const Element u = bits::lowest(s & ~bits::bit(apex_));
      const ElementSet comparable = p_.below(u) | p_.above(u);
      w = Witness::split(p_.label(u), rec(s & comparable), rec(s & ~bits::bit(u)));
    }
    memo_.emplace(s, w);
    return w;
  }

  const Poset& p_;
  Element apex_ = 0;
  std::unordered_map<ElementSet, WitnessPtr> memo_;
};

// Nonevasiveness of Δ(alive_{<x}) for f(x) < x (in the chosen orientation).
//
// The elements of alive_{<x} not below f(x) are removed top-down along a
// linear extension; each has link Δ(alive_{<a}) with f(a) < a, handled
// recursively. What remains is the cone Δ(alive_{<=f(x)}). Only elements
// below x are ever inspected.
class LowerIntervalWitnesses {
 public:
  LowerIntervalWitnesses(OrientedPoset order, const PosetMap& f, ElementSet alive)
      : order_(order), f_(f), alive_(alive), cones_(order.p) {}

  WitnessPtr build(Element x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    const Element target = f_(x);
    const ElementSet lower = order_.down(x) & alive_;
    const ElementSet cone = (order_.down(target) | bits::bit(target)) & alive_;
    ElementSet pending = lower & ~cone;

    // Decreasing linear extension: maximal first, ties broken by label.
    std::vector<Element> removal;
    while (pending != 0) {
      Element next = 0;
      for (ElementSet rest = pending; rest != 0; rest &= rest - 1) {
        const Element a = bits::lowest(rest);
        if ((order_.up(a) & pending) == 0) {
          next = a;
          break;
        }
      }
      removal.push_back(next);
      pending &= ~bits::bit(next);
    }

    WitnessPtr w = cones_.build(cone, target);
    for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
      // f(a) <= f(x) < a, so the recursion is again a strict descent.
      w = Witness::split(order_.p.label(*it), build(*it), std::move(w));
    }
    memo_.emplace(x, w);
    return w;
  }

 private:
  OrientedPoset order_;
  const PosetMap& f_;
  ElementSet alive_;
  ConeWitnesses cones_;
  std::unordered_map<Element, WitnessPtr> memo_;
};

WitnessPtr interval_witness_unchecked(const Poset& p, const PosetMap& f, ElementSet alive, Element x) {
  const bool descends = p.less(f(x), x);
  const OrientedPoset order{p, !descends};
  LowerIntervalWitnesses lower(order, f, alive);
  WitnessPtr w = lower.build(x);

  // Join with the opposite interval: each point leaf p becomes the cone
  // p * Δ(opposite), which is the order complex of {p} ∪ opposite.
  const ElementSet opposite = order.up(x) & alive;
  if (opposite == 0) return w;
  ConeWitnesses cones(p);
  std::unordered_map<std::string, WitnessPtr> cache;
  return map_point_leaves(w, [&](const std::string& label) {
    if (auto it = cache.find(label); it != cache.end()) return it->second;
    const Element apex = p.index_of(label);
    WitnessPtr c = cones.build(opposite | bits::bit(apex), apex);
    cache.emplace(label, c);
    return c;
  });
}

void check_interval_preconditions(const Poset& p, const PosetMap& f, ElementSet alive, Element x) {
  if (f.size() != p.size()) throw InputError("map does not match the poset");
  if (!f.flags().monotone) throw PreconditionError("interval witness: map is not monotone");
  if (x >= p.size() || !bits::test(alive, x)) throw InputError("interval witness: element not in the poset");
  if (f(x) == x) throw PreconditionError("interval witness: '" + p.label(x) + "' is a fixed point");
  bits::for_each(alive, [&](unsigned y) {
    if (!bits::test(alive, f(y))) {
      throw PreconditionError("interval witness: map leaves the subposet at '" + p.label(y) + "'");
    }
  });
}

}  // namespace

WitnessPtr interval_witness(const Poset& p, const PosetMap& f, Element x) {
  return interval_witness(p, f, p.all(), x);
}

WitnessPtr interval_witness(const Poset& p, const PosetMap& f, ElementSet alive, Element x) {
  alive &= p.all();
  check_interval_preconditions(p, f, alive, x);
  return interval_witness_unchecked(p, f, alive, x);
}

namespace {

// Shorter labels first, then bytewise: "{}" precedes "{1}" and "2" precedes "10".
Element label_least(const Poset& p, ElementSet s) {
  Element best = bits::lowest(s);
  bits::for_each(s, [&](unsigned i) {
    const std::string& a = p.label(i);
    const std::string& b = p.label(best);
    if (a.size() < b.size() || (a.size() == b.size() && a < b)) best = i;
  });
  return best;
}

}  // namespace

ReductionReport theorem_reduce(const Poset& p, const PosetMap& f, ElementSet q, const ReduceOptions& options) {
  if (p.empty()) throw InputError("reduce: empty poset");
  if (f.size() != p.size()) throw InputError("reduce: map does not match the poset");
  if (!f.flags().monotone) throw PreconditionError("reduce: map is not monotone");
  if (!bits::subset(q, p.all())) throw InputError("reduce: subposet has elements outside the poset");
  const ElementSet fixed = fixed_points(f);
  if (!bits::subset(fixed, q)) {
    throw PreconditionError("reduce: subposet misses fixed point '" + p.label(bits::lowest(fixed & ~q)) + "'");
  }

  const ElementSet removed_set = p.all() & ~q;
  // φ^|P∖Q| can still reach outside Q when Q lies strictly between Fix φ and
  // P (chain a<b<c, φ = (a,a,b), Q = {a,c}); the full power φ^|P| lands in
  // Fix φ ⊆ Q. Either way only γ(P) ⊆ Q is needed.
  PosetMap gamma = power(p, f, static_cast<std::size_t>(bits::count(removed_set)));
  if (!bits::subset(image(gamma), q)) gamma = stabilize(p, f);
  if (!bits::subset(image(gamma), q)) {
    throw std::logic_error("reduce: stabilized map does not land in the subposet");
  }

  ReductionReport report{gamma, {}, {}, std::nullopt};
  ElementSet alive = p.all();
  while ((alive & ~q) != 0) {
    const Element x = label_least(p, alive & ~q);
    report.removal_order.push_back(x);
    report.certificate.removed.push_back(p.label(x));
    report.certificate.witnesses.push_back(interval_witness_unchecked(p, gamma, alive, x));
    alive &= ~bits::bit(x);
  }

  const FacetList from = maximal_chains(p, p.all());
  const FacetList to = maximal_chains(p, q);
  if (options.self_check && !verify_certificate_over(p.labels(), from, to, report.certificate)) {
    throw std::logic_error("reduce: produced certificate failed verification");
  }

  if (options.emit_collapse) {
    CollapseSequence seq{p.labels(), {}};
    FacetList current = from;
    for (std::size_t i = 0; i < report.removal_order.size(); ++i) {
      const Element x = report.removal_order[i];
      if (!collapse_detail::compile_vertex(p.labels(), current, x, *report.certificate.witnesses[i], seq.steps)) {
        throw std::logic_error("reduce: witness did not compile to a collapse");
      }
      current = facets::remove_vertex(current, x);
    }
    if (options.self_check && !collapse_detail::replay(p.labels(), from, to, seq.steps)) {
      throw std::logic_error("reduce: collapse sequence failed verification");
    }
    report.collapse = std::move(seq);
  }
  return report;
}

ReductionReport reduce_to_image(const Poset& p, const PosetMap& f, const ReduceOptions& options) {
  if (f.size() != p.size()) throw InputError("reduce: map does not match the poset");
  return theorem_reduce(p, f, image(f), options);
}

}  // namespace nec
