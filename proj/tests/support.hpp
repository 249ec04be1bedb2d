#pragma once

// Fixtures and brute-force oracles shared by the test binaries. Nothing here
// calls into the search or reduction code; the oracles work on plain sets of
// label sets so they stay independent of the library's mask machinery.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "necollapse/complex.hpp"
#include "necollapse/poset.hpp"
#include "necollapse/poset_map.hpp"

namespace testing {

using Face = std::set<std::string>;
using FaceSet = std::set<Face>;

inline nec::SimplicialComplex cx(const std::vector<std::vector<std::string>>& facets) {
  return nec::SimplicialComplex::from_facets(facets);
}

inline nec::Poset poset(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> covers) {
  return nec::Poset::from_covers(std::move(elements), covers);
}

inline nec::Poset chain(const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return poset(labels, covers);
}

inline std::string subset_label(unsigned mask, unsigned n) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < n; ++i) {
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

// Subsets of {1..n} under inclusion, labelled "{}", "{1}", "{1,2}", ...
inline nec::Poset boolean_lattice(unsigned n) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (unsigned m = 0; m < (1u << n); ++m) {
    elements.push_back(subset_label(m, n));
    for (unsigned i = 0; i < n; ++i) {
      if (!(m & (1u << i))) covers.emplace_back(subset_label(m, n), subset_label(m | (1u << i), n));
    }
  }
  return poset(elements, covers);
}

inline nec::PosetMap map_of(const nec::Poset& p, const std::map<std::string, std::string>& m) {
  return nec::PosetMap::from_labels(p, m);
}

// The B2 closure map S -> S u {2}.
inline nec::PosetMap b2_closure(const nec::Poset& b2) {
  return map_of(b2, {{"{}", "{2}"}, {"{1}", "{1,2}"}, {"{2}", "{2}"}, {"{1,2}", "{1,2}"}});
}

// ---- complexes as explicit face sets -------------------------------------

inline FaceSet all_faces(const std::vector<std::vector<std::string>>& facets) {
  FaceSet out;
  for (const auto& f : facets) {
    const std::size_t k = f.size();
    for (std::size_t m = 1; m < (std::size_t{1} << k); ++m) {
      Face s;
      for (std::size_t i = 0; i < k; ++i) {
        if (m & (std::size_t{1} << i)) s.insert(f[i]);
      }
      out.insert(s);
    }
  }
  return out;
}

inline FaceSet all_faces(const nec::SimplicialComplex& x) { return all_faces(x.facet_labels()); }

inline std::set<std::string> vertices_of(const FaceSet& faces) {
  std::set<std::string> v;
  for (const auto& f : faces) v.insert(f.begin(), f.end());
  return v;
}

inline FaceSet naive_link(const FaceSet& faces, const std::string& v) {
  FaceSet out;
  for (const auto& f : faces) {
    if (f.count(v) && f.size() > 1) {
      Face g = f;
      g.erase(v);
      out.insert(g);
    }
  }
  return out;
}

inline FaceSet naive_delete(const FaceSet& faces, const std::string& v) {
  FaceSet out;
  for (const auto& f : faces) {
    if (!f.count(v)) out.insert(f);
  }
  return out;
}

// Straight transcription of the recursive definition: a point, or some vertex
// with nonevasive link and deletion. No memo, no shortcuts.
inline bool naive_nonevasive(const FaceSet& faces) {
  const auto verts = vertices_of(faces);
  if (verts.empty()) return false;
  if (verts.size() == 1) return true;
  for (const auto& v : verts) {
    if (naive_nonevasive(naive_link(faces, v)) && naive_nonevasive(naive_delete(faces, v))) return true;
  }
  return false;
}

inline long long naive_reduced_euler(const FaceSet& faces) {
  long long chi = -1;
  for (const auto& f : faces) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

// Betti numbers without trailing zeros, so complexes of different dimension
// compare by homology alone.
inline std::vector<std::size_t> betti(const nec::SimplicialComplex& x) {
  auto b = nec::z2_betti(x);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

// Chains of a poset enumerated over all subsets.
inline FaceSet naive_order_complex(const nec::Poset& p) {
  FaceSet out;
  const std::size_t n = p.size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    bool chain = true;
    for (std::size_t a = 0; a < n && chain; ++a) {
      for (std::size_t b = a + 1; b < n && chain; ++b) {
        if ((m >> a & 1) && (m >> b & 1) && !p.comparable(a, b)) chain = false;
      }
    }
    if (!chain) continue;
    Face f;
    for (std::size_t a = 0; a < n; ++a) {
      if (m >> a & 1) f.insert(p.label(a));
    }
    out.insert(f);
  }
  return out;
}

// μ(x,y) by Hall's chain count: sum over chains x = c0 < ... < ck = y of (-1)^k.
inline long long chain_mobius(const nec::Poset& p, nec::Element x, nec::Element y) {
  if (x == y) return 1;
  if (!p.less(x, y)) return 0;
  long long total = 0;
  std::function<void(nec::Element, int)> walk = [&](nec::Element at, int len) {
    if (at == y) {
      total += (len % 2 == 0) ? 1 : -1;
      return;
    }
    for (nec::Element z = 0; z < p.size(); ++z) {
      if (p.less(at, z) && p.leq(z, y)) walk(z, len + 1);
    }
  };
  walk(x, 0);
  return total;
}

// Every function P -> P as a table, filtered by a predicate.
inline std::vector<std::vector<nec::Element>> all_tables(std::size_t n,
                                                         const std::function<bool(const std::vector<nec::Element>&)>& keep) {
  std::vector<std::vector<nec::Element>> out;
  std::vector<nec::Element> t(n, 0);
  while (true) {
    if (keep(t)) out.push_back(t);
    std::size_t i = 0;
    while (i < n && ++t[i] == n) t[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool table_order_preserving(const nec::Poset& p, const std::vector<nec::Element>& t) {
  for (nec::Element a = 0; a < p.size(); ++a) {
    for (nec::Element b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) && !p.leq(t[a], t[b])) return false;
    }
  }
  return true;
}

}  // namespace testing
