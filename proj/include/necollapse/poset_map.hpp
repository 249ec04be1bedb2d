#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "necollapse/poset.hpp"

namespace nec {

// Classification of a self-map of a poset.
//
//   order_preserving  x <= y implies f(x) <= f(y)
//   monotone          order preserving, and every x is comparable to f(x)
//   increasing        order preserving, and x <= f(x) for all x
//   decreasing        order preserving, and x >= f(x) for all x
struct MapFlags {
  bool order_preserving = false;
  bool monotone = false;
  bool increasing = false;
  bool decreasing = false;
  // First element (label order) not comparable to its image.
  std::optional<Element> incomparable_element;
  // First pair x < y (lexicographic) with f(x) not <= f(y).
  std::optional<std::pair<Element, Element>> order_violation;

  bool operator==(const MapFlags&) const = default;
};

// Throws InputError when `table` is not a total self-map of `p`.
MapFlags classify_map(const Poset& p, std::span<const Element> table);

// A total self-map of a poset together with its classification. The poset
// is not stored; every operation takes it explicitly and it must be the one
// the map was built against.
class PosetMap {
 public:
  PosetMap(const Poset& domain, std::vector<Element> table);

  static PosetMap identity(const Poset& domain);
  static PosetMap from_labels(const Poset& domain, const std::map<std::string, std::string>& table);

  Element operator()(Element x) const { return table_[x]; }
  std::size_t size() const { return table_.size(); }
  const std::vector<Element>& table() const { return table_; }
  const MapFlags& flags() const { return flags_; }

  bool operator==(const PosetMap& other) const { return table_ == other.table_; }

 private:
  std::vector<Element> table_;
  MapFlags flags_;
};

// outer ∘ inner
PosetMap compose(const Poset& p, const PosetMap& outer, const PosetMap& inner);
PosetMap power(const Poset& p, const PosetMap& f, std::size_t exponent);

// The unique pair (increasing, decreasing) with f = increasing ∘ decreasing
// whose fixed-point sets cover P. Throws PreconditionError unless f is
// monotone.
struct MonotoneDecomposition {
  PosetMap increasing;
  PosetMap decreasing;
};
MonotoneDecomposition decompose_monotone(const Poset& p, const PosetMap& f);

// f^|P|. Requires f order preserving.
PosetMap stabilize(const Poset& p, const PosetMap& f);

ElementSet fixed_points(const PosetMap& f);
ElementSet image(const PosetMap& f);

// Elements x with stabilize(f)(x) == z.
ElementSet stable_preimage(const Poset& p, const PosetMap& f, Element z);

// Restriction of f to the induced subposet on `keep`; throws
// PreconditionError if f does not map `keep` into itself.
PosetMap restrict_map(const Poset& p, const PosetMap& f, ElementSet keep);

std::map<std::string, std::string> map_labels(const Poset& p, const PosetMap& f);

}  // namespace nec
