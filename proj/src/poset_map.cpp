#include "necollapse/poset_map.hpp"

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec {

MapFlags classify_map(const Poset& p, std::span<const Element> table) {
  const auto n = static_cast<Element>(p.size());
  if (table.size() != n) {
    throw InputError("map has " + std::to_string(table.size()) + " entries for a poset of " +
                     std::to_string(n) + " elements");
  }
  for (Element v : table) {
    if (v >= n) throw InputError("map value out of range");
  }

  MapFlags flags;
  flags.order_preserving = true;
  for (Element x = 0; x < n && flags.order_preserving; ++x) {
    bits::for_each(p.above(x), [&](unsigned y) {
      if (flags.order_preserving && !p.leq(table[x], table[y])) {
        flags.order_preserving = false;
        flags.order_violation = std::pair<Element, Element>{x, static_cast<Element>(y)};
      }
    });
  }

  bool all_up = true;
  bool all_down = true;
  for (Element x = 0; x < n; ++x) {
    const bool up = p.leq(x, table[x]);
    const bool down = p.leq(table[x], x);
    all_up = all_up && up;
    all_down = all_down && down;
    if (!up && !down && !flags.incomparable_element) flags.incomparable_element = x;
  }
  flags.monotone = flags.order_preserving && !flags.incomparable_element;
  flags.increasing = flags.order_preserving && all_up;
  flags.decreasing = flags.order_preserving && all_down;
  return flags;
}

PosetMap::PosetMap(const Poset& domain, std::vector<Element> table)
    : table_(std::move(table)), flags_(classify_map(domain, table_)) {}

PosetMap PosetMap::identity(const Poset& domain) {
  std::vector<Element> t(domain.size());
  for (Element x = 0; x < t.size(); ++x) t[x] = x;
  return PosetMap(domain, std::move(t));
}

PosetMap PosetMap::from_labels(const Poset& domain, const std::map<std::string, std::string>& table) {
  std::vector<Element> t(domain.size());
  std::vector<bool> seen(domain.size(), false);
  for (const auto& [from, to] : table) {
    Element x = domain.index_of(from);
    t[x] = domain.index_of(to);
    seen[x] = true;
  }
  for (Element x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw InputError("map is not total: no value for '" + domain.label(x) + "'");
  }
  return PosetMap(domain, std::move(t));
}

PosetMap compose(const Poset& p, const PosetMap& outer, const PosetMap& inner) {
  std::vector<Element> t(inner.size());
  for (Element x = 0; x < t.size(); ++x) t[x] = outer(inner(x));
  return PosetMap(p, std::move(t));
}

PosetMap power(const Poset& p, const PosetMap& f, std::size_t exponent) {
  std::vector<Element> t(f.size());
  for (Element x = 0; x < t.size(); ++x) t[x] = x;
  for (std::size_t k = 0; k < exponent; ++k) {
    bool changed = false;
    for (auto& v : t) {
      Element next = f(v);
      changed = changed || next != v;
      v = next;
    }
    // f^(k+1) == f^k on the current image means every further power agrees.
    if (!changed) break;
  }
  return PosetMap(p, std::move(t));
}

MonotoneDecomposition decompose_monotone(const Poset& p, const PosetMap& f) {
  if (!f.flags().monotone) throw PreconditionError("decompose: map is not monotone");
  const auto n = static_cast<Element>(p.size());
  std::vector<Element> up(n), down(n);
  for (Element x = 0; x < n; ++x) {
    up[x] = p.less(x, f(x)) ? f(x) : x;
    down[x] = p.less(f(x), x) ? f(x) : x;
  }
  MonotoneDecomposition d{PosetMap(p, std::move(up)), PosetMap(p, std::move(down))};

  const ElementSet covered = fixed_points(d.increasing) | fixed_points(d.decreasing);
  if (!d.increasing.flags().increasing || !d.decreasing.flags().decreasing ||
      compose(p, d.increasing, d.decreasing) != f || covered != p.all()) {
    throw std::logic_error("monotone decomposition failed its postconditions");
  }
  return d;
}

PosetMap stabilize(const Poset& p, const PosetMap& f) {
  if (!f.flags().order_preserving) throw PreconditionError("stabilize: map is not order preserving");
  PosetMap s = power(p, f, p.size());
  if (f.flags().monotone && !s.flags().monotone) {
    throw std::logic_error("power of a monotone map is not monotone");
  }
  return s;
}

ElementSet fixed_points(const PosetMap& f) {
  ElementSet s = 0;
  for (Element x = 0; x < f.size(); ++x) {
    if (f(x) == x) s |= bits::bit(x);
  }
  return s;
}

ElementSet image(const PosetMap& f) {
  ElementSet s = 0;
  for (Element x = 0; x < f.size(); ++x) s |= bits::bit(f(x));
  return s;
}

ElementSet stable_preimage(const Poset& p, const PosetMap& f, Element z) {
  if (z >= p.size()) throw InputError("stable_preimage: element out of range");
  const PosetMap s = stabilize(p, f);
  ElementSet out = 0;
  for (Element x = 0; x < s.size(); ++x) {
    if (s(x) == z) out |= bits::bit(x);
  }
  return out;
}

PosetMap restrict_map(const Poset& p, const PosetMap& f, ElementSet keep) {
  keep &= p.all();
  std::vector<Element> t;
  bits::for_each(keep, [&](unsigned x) {
    if (!bits::test(keep, f(x))) {
      throw PreconditionError("restriction: '" + p.label(x) + "' maps outside the subposet");
    }
    t.push_back(static_cast<Element>(bits::count(keep & bits::first(f(x)))));
  });
  return PosetMap(p.induced(keep), std::move(t));
}

std::map<std::string, std::string> map_labels(const Poset& p, const PosetMap& f) {
  std::map<std::string, std::string> out;
  for (Element x = 0; x < f.size(); ++x) out[p.label(x)] = p.label(f(x));
  return out;
}

}  // namespace nec
