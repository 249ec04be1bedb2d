#pragma once

#include <optional>
#include <vector>

#include "necollapse/collapse.hpp"
#include "necollapse/evasiveness.hpp"
#include "necollapse/poset.hpp"
#include "necollapse/poset_map.hpp"

namespace nec {

// Witness that lk x = Δ(P_{<x}) * Δ(P_{>x}) is nonevasive, for a monotone f
// with f(x) != x. When f(x) < x the lower interval is reduced onto the cone
// Δ(P_{<=f(x)}) and the upper interval is joined on afterwards; f(x) > x is
// the order-dual construction. Throws PreconditionError otherwise.
WitnessPtr interval_witness(const Poset& p, const PosetMap& f, Element x);

// Same, inside the induced subposet on `alive` (which must contain x and be
// mapped into itself by f).
WitnessPtr interval_witness(const Poset& p, const PosetMap& f, ElementSet alive, Element x);

struct ReductionReport {
  PosetMap gamma;  // the stabilized map driving the removals
  std::vector<Element> removal_order;
  NECertificate certificate;  // Δ(P) ↘NE Δ(Q)
  std::optional<CollapseSequence> collapse;
};

struct ReduceOptions {
  bool emit_collapse = false;
  // Re-verify the certificate (and collapse) before returning.
  bool self_check = true;
};

// Δ(P) ↘NE Δ(Q) for monotone f and Fix f ⊆ Q ⊆ P. Elements of P \ Q are
// removed label-least first (shorter labels first, then bytewise).
ReductionReport theorem_reduce(const Poset& p, const PosetMap& f, ElementSet q, const ReduceOptions& options = {});

// theorem_reduce with Q = f(P).
ReductionReport reduce_to_image(const Poset& p, const PosetMap& f, const ReduceOptions& options = {});

}  // namespace nec
