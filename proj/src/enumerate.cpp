#include "necollapse/enumerate.hpp"

#include <algorithm>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec {

std::vector<std::string> default_labels(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < n; ++i) {
    std::string l(1, static_cast<char>('a' + i % 26));
    if (i >= 26) l += std::to_string(i / 26);
    out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Adds element k on top of a poset on 0..k-1 with a down-closed set D below
// it and an up-closed set U above it; D < U must already hold.
void grow_poset(unsigned n, unsigned k, std::vector<ElementSet>& below, const std::vector<std::string>& labels,
                const std::function<void(const Poset&)>& visit) {
  if (k == n) {
    visit(Poset::from_relation(labels, below));
    return;
  }
  const ElementSet universe = bits::first(k);
  for (ElementSet d = 0;; d = (d - universe) & universe) {
    bool down_closed = true;
    bits::for_each(d, [&](unsigned a) { down_closed = down_closed && bits::subset(below[a], d); });
    if (down_closed) {
      const ElementSet free = universe & ~d;
      for (ElementSet u = 0;; u = (u - free) & free) {
        bool ok = true;
        bits::for_each(u, [&](unsigned a) {
          // Up-closed, and every element of d already below a.
          for (unsigned b = 0; b < k && ok; ++b) {
            if (bits::test(below[b], a) && !bits::test(u, b)) ok = false;
          }
          ok = ok && bits::subset(d, below[a]);
        });
        if (ok) {
          std::vector<ElementSet> saved = below;
          below[k] = d;
          bits::for_each(u, [&](unsigned a) { below[a] |= bits::bit(k); });
          grow_poset(n, k + 1, below, labels, visit);
          below = std::move(saved);
        }
        if (u == free) break;
      }
    }
    if (d == universe) break;
  }
}

void assign_maps(const Poset& p, std::vector<Element>& table, Element x, bool increasing_only,
                 const std::function<void(const PosetMap&)>& visit) {
  const auto n = static_cast<Element>(p.size());
  if (x == n) {
    visit(PosetMap(p, table));
    return;
  }
  for (Element y = 0; y < n; ++y) {
    if (increasing_only ? !p.leq(x, y) : !p.comparable(x, y)) continue;
    bool ok = true;
    for (Element w = 0; w < x && ok; ++w) {
      if (p.less(w, x) && !p.leq(table[w], y)) ok = false;
      if (p.less(x, w) && !p.leq(y, table[w])) ok = false;
    }
    if (!ok) continue;
    table[x] = y;
    assign_maps(p, table, x + 1, increasing_only, visit);
  }
}

void grow_antichain(const std::vector<VertexSet>& candidates, std::size_t next, FacetList& chosen,
                    const std::vector<std::string>& labels, const std::function<void(const SimplicialComplex&)>& visit) {
  if (next == candidates.size()) {
    if (!chosen.empty()) visit(SimplicialComplex::from_masks(labels, chosen));
    return;
  }
  grow_antichain(candidates, next + 1, chosen, labels, visit);
  const VertexSet s = candidates[next];
  for (VertexSet c : chosen) {
    if (bits::subset(s, c) || bits::subset(c, s)) return;
  }
  chosen.push_back(s);
  grow_antichain(candidates, next + 1, chosen, labels, visit);
  chosen.pop_back();
}

}  // namespace

void for_each_poset(unsigned n, const std::function<void(const Poset&)>& visit) {
  if (n > 16) throw InputError("poset enumeration limited to 16 elements");
  std::vector<ElementSet> below(n, 0);
  grow_poset(n, 0, below, default_labels(n), visit);
}

void for_each_monotone_map(const Poset& p, const std::function<void(const PosetMap&)>& visit) {
  std::vector<Element> table(p.size());
  assign_maps(p, table, 0, false, visit);
}

void for_each_increasing_map(const Poset& p, const std::function<void(const PosetMap&)>& visit) {
  std::vector<Element> table(p.size());
  assign_maps(p, table, 0, true, visit);
}

void for_each_complex(unsigned n, const std::function<void(const SimplicialComplex&)>& visit) {
  if (n > 6) throw InputError("complex enumeration limited to 6 vertices");
  std::vector<VertexSet> candidates;
  for (VertexSet s = 1; s < bits::bit(n); ++s) candidates.push_back(s);
  FacetList chosen;
  grow_antichain(candidates, 0, chosen, default_labels(n), visit);
}

SimplicialComplex random_complex(std::mt19937_64& rng, std::span<const std::string> labels, unsigned facet_count) {
  if (labels.empty() || labels.size() > kMaxVertices) throw InputError("random complex: bad label count");
  std::uniform_int_distribution<std::uint64_t> coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  FacetList f;
  for (unsigned i = 0; i < std::max(1u, facet_count); ++i) {
    VertexSet m = 0;
    for (unsigned v = 0; v < labels.size(); ++v) {
      if (coin(rng) != 0) m |= bits::bit(v);
    }
    if (m == 0) m = bits::bit(static_cast<unsigned>(pick(rng)));
    f.push_back(m);
  }
  return SimplicialComplex::from_masks(labels, f);
}

}  // namespace nec
