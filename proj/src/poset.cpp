#include "necollapse/poset.hpp"

#include <algorithm>
#include <set>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxElements) {
    throw InputError("poset has " + std::to_string(n) + " elements; at most " +
                     std::to_string(kMaxElements) + " are supported");
  }
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> elements,
                         std::span<const std::pair<std::string, std::string>> covers) {
  std::vector<std::string> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    throw InputError("duplicate element label '" + *dup + "'");
  }
  check_size(sorted.size());

  auto index = [&](const std::string& l) -> Element {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), l);
    if (it == sorted.end() || *it != l) throw InputError("cover mentions unknown element '" + l + "'");
    return static_cast<Element>(it - sorted.begin());
  };

  std::vector<ElementSet> below(sorted.size(), 0);
  for (const auto& [lo, hi] : covers) {
    Element a = index(lo);
    Element b = index(hi);
    if (a == b) throw InputError("cover relates '" + lo + "' to itself");
    below[b] |= bits::bit(a);
  }
  return from_relation(std::move(sorted), std::move(below));
}

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<ElementSet> below) {
  check_size(labels.size());
  if (below.size() != labels.size()) throw InputError("relation size does not match element count");
  if (!std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw InputError("element labels must be sorted and unique");
  }
  const auto n = static_cast<unsigned>(labels.size());
  for (auto& b : below) {
    if (!bits::subset(b, bits::first(n))) throw InputError("relation mentions elements out of range");
  }
  // Warshall closure on down-sets.
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      if (bits::test(below[i], k)) below[i] |= below[k];
    }
  }
  for (unsigned i = 0; i < n; ++i) {
    if (bits::test(below[i], i)) {
      throw InputError("order relation has a cycle through '" + labels[i] + "'");
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.below_ = std::move(below);
  p.above_.assign(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    bits::for_each(p.below_[i], [&](unsigned j) { p.above_[j] |= bits::bit(i); });
  }
  return p;
}

ElementSet Poset::all() const { return bits::first(static_cast<unsigned>(size())); }

std::optional<Element> Poset::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element Poset::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw InputError("unknown element '" + std::string(label) + "'");
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element hi = 0; hi < size(); ++hi) {
    bits::for_each(below_[hi], [&](unsigned lo) {
      // lo is covered by hi iff nothing lies strictly between them.
      if ((above_[lo] & below_[hi]) == 0) out.emplace_back(lo, hi);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> Poset::minimum() const {
  for (Element x = 0; x < size(); ++x) {
    if ((above_[x] | bits::bit(x)) == all()) return x;
  }
  return std::nullopt;
}

std::optional<Element> Poset::maximum() const {
  for (Element x = 0; x < size(); ++x) {
    if ((below_[x] | bits::bit(x)) == all()) return x;
  }
  return std::nullopt;
}

Poset Poset::induced(ElementSet keep) const {
  keep &= all();
  std::vector<std::string> labels;
  std::vector<ElementSet> below;
  bits::for_each(keep, [&](unsigned x) {
    labels.push_back(labels_[x]);
    below.push_back(compress(below_[x] & keep, keep));
  });
  Poset p;
  p.labels_ = std::move(labels);
  p.below_ = std::move(below);
  p.above_.assign(p.labels_.size(), 0);
  for (unsigned i = 0; i < p.labels_.size(); ++i) {
    bits::for_each(p.below_[i], [&](unsigned j) { p.above_[j] |= bits::bit(i); });
  }
  return p;
}

Poset Poset::dual() const {
  Poset p = *this;
  std::swap(p.below_, p.above_);
  return p;
}

ElementSet Poset::set_of(std::span<const std::string> labels) const {
  ElementSet s = 0;
  for (const auto& l : labels) s |= bits::bit(index_of(l));
  return s;
}

std::vector<std::string> Poset::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  bits::for_each(s & all(), [&](unsigned x) { out.push_back(labels_[x]); });
  return out;
}

Poset open_interval(const Poset& p, Element x, Side side) {
  if (x >= p.size()) throw InputError("element index out of range");
  return p.induced(side == Side::below ? p.below(x) : p.above(x));
}

ElementSet compress(ElementSet s, ElementSet keep) {
  ElementSet out = 0;
  unsigned pos = 0;
  bits::for_each(keep, [&](unsigned x) {
    if (bits::test(s, x)) out |= bits::bit(pos);
    ++pos;
  });
  return out;
}

ElementSet expand(ElementSet s, ElementSet keep) {
  ElementSet out = 0;
  unsigned pos = 0;
  bits::for_each(keep, [&](unsigned x) {
    if (bits::test(s, pos)) out |= bits::bit(x);
    ++pos;
  });
  return out;
}

}  // namespace nec
