#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nec {

// Index of an element in a poset. Elements are numbered in lexicographic
// label order; the numbering carries no order-theoretic meaning.
using Element = std::uint32_t;

// Set of elements as a bit mask over element indices.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

// A finite strict partial order on opaque string labels.
//
// The relation is stored transitively closed as per-element down-sets and
// up-sets. Values are immutable once built.
class Poset {
 public:
  Poset() = default;

  // Builds a poset from Hasse-style input. The cover list may contain any
  // generating relation; it is closed transitively and rejected if it
  // contains a cycle. Labels must be unique.
  static Poset from_covers(std::vector<std::string> elements,
                           std::span<const std::pair<std::string, std::string>> covers);

  // `labels` must be sorted and unique; `below[i]` lists elements that are
  // strictly below element i (closure is taken here).
  static Poset from_relation(std::vector<std::string> labels, std::vector<ElementSet> below);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  ElementSet all() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  std::optional<Element> find(std::string_view label) const;
  Element index_of(std::string_view label) const;

  ElementSet below(Element x) const { return below_[x]; }
  ElementSet above(Element x) const { return above_[x]; }
  bool less(Element a, Element b) const { return (below_[b] >> a) & 1u; }
  bool leq(Element a, Element b) const { return a == b || less(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  // Cover relations (transitive reduction), sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  std::optional<Element> minimum() const;
  std::optional<Element> maximum() const;

  // Induced subposet on `keep`. Indices are renumbered; relative label order
  // is preserved.
  Poset induced(ElementSet keep) const;
  Poset dual() const;

  ElementSet set_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  bool operator==(const Poset&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
};

enum class Side { below, above };

// P_{<x} or P_{>x} as an induced subposet (possibly empty).
Poset open_interval(const Poset& p, Element x, Side side);

// Renumbers a subset of `keep` to the indices used by `Poset::induced(keep)`.
ElementSet compress(ElementSet s, ElementSet keep);
// Inverse of `compress`.
ElementSet expand(ElementSet s, ElementSet keep);

}  // namespace nec
