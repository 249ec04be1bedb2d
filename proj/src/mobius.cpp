#include "necollapse/mobius.hpp"

#include <algorithm>
#include <numeric>

#include "necollapse/bits.hpp"
#include "necollapse/complex.hpp"
#include "necollapse/error.hpp"
#include "necollapse/evasiveness.hpp"
#include "necollapse/reduction.hpp"

namespace nec {

MobiusTable::MobiusTable(const Poset& p) : n_(p.size()), values_(n_ * n_) {
  // Sorting by down-set size gives a linear extension.
  std::vector<Element> order(n_);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return bits::count(p.below(a)) < bits::count(p.below(b)); });
  for (Element x = 0; x < n_; ++x) {
    values_[x * n_ + x] = 1;
    for (Element y : order) {
      if (!p.less(x, y)) continue;
      Integer sum = 0;
      // z ranges over [x, y).
      const ElementSet between = (p.above(x) | bits::bit(x)) & p.below(y);
      bits::for_each(between, [&](unsigned z) { sum += values_[x * n_ + z]; });
      values_[x * n_ + y] = -sum;
    }
  }
}

MobiusTable mobius_table(const Poset& p) { return MobiusTable(p); }

namespace {

struct Bounds {
  Element bottom;
  Element top;
};

Bounds require_bounds(const Poset& p, const char* what) {
  const auto lo = p.minimum();
  const auto hi = p.maximum();
  if (!lo || !hi || p.size() < 2) {
    throw PreconditionError(std::string(what) + ": poset needs distinct 0̂ and 1̂");
  }
  return {*lo, *hi};
}

// μ_S(0̂, 1̂) over the induced order on S (which contains both bounds).
Integer mobius_of_subposet(const Poset& p, ElementSet s, Bounds b) {
  const Poset sub = p.induced(s);
  const MobiusTable t(sub);
  const auto lo = static_cast<Element>(bits::count(s & bits::first(b.bottom)));
  const auto hi = static_cast<Element>(bits::count(s & bits::first(b.top)));
  return t(lo, hi);
}

// The zero-fixed argument for an increasing map g with g(0̂) = 0̂ and a target
// subposet q: R̄ NE-reduces onto q̄, and μ_R = μ_q follows from Hall's
// identity on both ends.
struct RouteResult {
  Integer value;
  bool consistent = false;
};

RouteResult fixed_zero_route(const Poset& p, const PosetMap& g, ElementSet q, ElementSet preimage, Bounds b) {
  const ElementSet ends = bits::bit(b.bottom) | bits::bit(b.top);
  const ElementSet r = (p.all() & ~preimage) | ends;
  RouteResult out{mobius_of_subposet(p, r, b), false};

  const ElementSet r_bar = r & ~ends;
  const ElementSet q_bar = q & ~ends;
  bool reduced = false;
  long long euler_r = -1;
  long long euler_q = -1;
  if (r_bar == 0) {
    reduced = q_bar == 0;
  } else if (q_bar != 0 && bits::subset(q_bar, r_bar)) {
    const Poset rp = p.induced(r_bar);
    const PosetMap psi = restrict_map(p, g, r_bar);
    const ElementSet target = compress(q_bar, r_bar);
    ReduceOptions opts;
    opts.self_check = false;
    const ReductionReport rep = theorem_reduce(rp, psi, target, opts);
    const SimplicialComplex from = order_complex(rp);
    const SimplicialComplex to = *order_complex(rp, target);
    reduced = verify_ne_certificate(from, to, rep.certificate);
    euler_r = reduced_euler(from);
    euler_q = reduced_euler(to);
  }
  out.consistent = reduced && euler_r == euler_q && out.value == mobius_of_subposet(p, q | ends, b);
  return out;
}

}  // namespace

HallReport hall_check(const Poset& p) {
  const Bounds b = require_bounds(p, "hall-check");
  HallReport r;
  r.mobius = MobiusTable(p)(b.bottom, b.top);
  const ElementSet proper = p.all() & ~(bits::bit(b.bottom) | bits::bit(b.top));
  r.reduced_euler = reduced_euler(order_complex(p, proper));
  r.holds = r.mobius == r.reduced_euler;
  return r;
}

CrapoReport crapo_check(const Poset& p, const PosetMap& f, ElementSet q) {
  const Bounds b = require_bounds(p, "crapo-check");
  if (f.size() != p.size()) throw InputError("crapo-check: map does not match the poset");
  if (!bits::subset(q, p.all())) throw InputError("crapo-check: subposet has elements outside the poset");
  if (!f.flags().increasing) throw PreconditionError("crapo-check: not-increasing");
  const ElementSet fixed = fixed_points(f);
  if (!bits::subset(fixed, q)) throw PreconditionError("crapo-check: fix-not-in-Q");
  const ElementSet preimage = stable_preimage(p, f, b.top);
  if ((q & preimage) != bits::bit(b.top)) throw PreconditionError("crapo-check: Q-meets-preimage");

  const MobiusTable mu(p);
  CrapoReport r;
  bits::for_each(preimage, [&](unsigned z) { r.lhs += mu(b.bottom, z); });

  if (bits::test(fixed, b.bottom)) {
    r.which = CrapoCase::zero_fixed;
    r.rhs = mobius_of_subposet(p, q, b);
    const RouteResult route = fixed_zero_route(p, f, q, preimage, b);
    r.route_value = route.value;
    r.route_consistent = route.consistent;
  } else {
    r.which = CrapoCase::zero_not_fixed;
    r.rhs = 0;
    const PosetMap s = stabilize(p, f);
    if (s(b.bottom) == b.top) {
      // Everything reaches 1̂: the lhs is the full Möbius row sum.
      Integer total = 0;
      for (Element z = 0; z < p.size(); ++z) total += mu(b.bottom, z);
      r.route_value = total;
      r.route_consistent = preimage == p.all();
    } else {
      std::vector<Element> table = f.table();
      table[b.bottom] = b.bottom;
      const PosetMap psi(p, std::move(table));
      const Element atom = f(b.bottom);
      const ElementSet q_star =
          ((p.above(atom) | bits::bit(atom)) & ~preimage) | bits::bit(b.bottom) | bits::bit(b.top);
      const bool modified_ok = psi.flags().increasing && fixed_points(psi) == (fixed | bits::bit(b.bottom)) &&
                               stable_preimage(p, psi, b.top) == preimage;
      const RouteResult route = fixed_zero_route(p, psi, q_star, preimage, b);
      r.route_value = route.value;
      // Q* has the single atom f(0̂), so its Möbius value vanishes.
      r.route_consistent = modified_ok && route.consistent && mobius_of_subposet(p, q_star, b) == 0;
    }
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace nec
