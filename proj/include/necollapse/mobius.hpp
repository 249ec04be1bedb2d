#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "necollapse/poset.hpp"
#include "necollapse/poset_map.hpp"

namespace nec {

using Integer = boost::multiprecision::cpp_int;

// μ(x, y) for all x <= y, with μ(x,x) = 1 and the sum of μ(x,z) over
// x <= z <= y vanishing for x < y. Entries for x not <= y read as zero.
class MobiusTable {
 public:
  explicit MobiusTable(const Poset& p);

  const Integer& operator()(Element x, Element y) const { return values_[x * n_ + y]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Integer> values_;
};

MobiusTable mobius_table(const Poset& p);

// μ_P(0̂, 1̂) against the reduced Euler characteristic of the proper part.
struct HallReport {
  Integer mobius;
  long long reduced_euler = 0;
  bool holds = false;
};

// Requires a minimum and a maximum and at least two elements.
HallReport hall_check(const Poset& p);

enum class CrapoCase { zero_fixed, zero_not_fixed };

struct CrapoReport {
  Integer lhs;  // sum of μ_P(0̂, z) over z with f^∞(z) = 1̂
  Integer rhs;  // μ_Q(0̂, 1̂) if 0̂ is fixed, else 0
  bool equal = false;
  CrapoCase which = CrapoCase::zero_fixed;

  // The same value obtained along the constructive route: μ_R(0̂, 1̂) for
  // R = (P minus the preimage of 1̂) plus 0̂ and 1̂, after redefining the map
  // at 0̂ when 0̂ is not fixed.
  Integer route_value;
  // The route's checks held: Δ(R̄) NE-reduced onto the proper part of the
  // chosen Q with a verified certificate and equal Euler characteristic, and
  // the modified map kept the preimage of 1̂.
  bool route_consistent = false;
};

// Throws PreconditionError naming the violated hypothesis: not-increasing,
// fix-not-in-Q, Q-meets-preimage (or a missing 0̂ / 1̂).
CrapoReport crapo_check(const Poset& p, const PosetMap& f, ElementSet q);

}  // namespace nec
