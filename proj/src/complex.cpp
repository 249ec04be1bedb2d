#include "necollapse/complex.hpp"

#include <algorithm>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec {

namespace facets {

FacetList normalize(FacetList f) {
  std::sort(f.begin(), f.end(), [](VertexSet a, VertexSet b) {
    const int ca = bits::count(a);
    const int cb = bits::count(b);
    return ca != cb ? ca > cb : a < b;
  });
  FacetList kept;
  for (VertexSet s : f) {
    if (s == 0) continue;
    bool dominated = false;
    for (VertexSet k : kept) {
      if (bits::subset(s, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

VertexSet support(const FacetList& f) {
  VertexSet s = 0;
  for (VertexSet x : f) s |= x;
  return s;
}

FacetList link(const FacetList& f, unsigned v) {
  FacetList out;
  const VertexSet b = bits::bit(v);
  for (VertexSet x : f) {
    if ((x & b) != 0 && x != b) out.push_back(x & ~b);
  }
  // Facets of the link stay maximal: dropping v from distinct maximal faces
  // that contain v keeps them incomparable.
  std::sort(out.begin(), out.end());
  return out;
}

FacetList remove_vertex(const FacetList& f, unsigned v) {
  FacetList out;
  const VertexSet b = bits::bit(v);
  for (VertexSet x : f) out.push_back(x & ~b);
  return normalize(std::move(out));
}

FacetList induced(const FacetList& f, VertexSet keep) {
  FacetList out;
  for (VertexSet x : f) out.push_back(x & keep);
  return normalize(std::move(out));
}

bool contains_face(const FacetList& f, VertexSet face) {
  if (face == 0) return false;
  for (VertexSet x : f) {
    if (bits::subset(face, x)) return true;
  }
  return false;
}

std::optional<unsigned> apex(const FacetList& f) {
  if (f.empty()) return std::nullopt;
  VertexSet common = ~VertexSet{0};
  for (VertexSet x : f) common &= x;
  if (common == 0) return std::nullopt;
  return bits::lowest(common);
}

std::vector<VertexSet> faces(const FacetList& f) {
  std::vector<VertexSet> out;
  for (VertexSet x : f) {
    for (VertexSet s = x; s != 0; s = (s - 1) & x) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_point(const FacetList& f) { return f.size() == 1 && bits::count(f[0]) == 1; }

std::size_t Hash::operator()(const FacetList& f) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ f.size();
  for (VertexSet x : f) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace facets

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facet_labels) {
  std::vector<std::string> universe;
  for (const auto& f : facet_labels) {
    if (f.empty()) throw InputError("complex contains an empty facet");
    universe.insert(universe.end(), f.begin(), f.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.empty()) throw InputError("complex has no vertices (void complex)");
  if (universe.size() > kMaxVertices) {
    throw InputError("complex has " + std::to_string(universe.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  FacetList masks;
  for (const auto& f : facet_labels) {
    VertexSet m = 0;
    for (const auto& l : f) {
      auto it = std::lower_bound(universe.begin(), universe.end(), l);
      m |= bits::bit(static_cast<unsigned>(it - universe.begin()));
    }
    masks.push_back(m);
  }
  return from_masks(universe, masks);
}

SimplicialComplex SimplicialComplex::from_masks(std::span<const std::string> universe, const FacetList& f) {
  if (universe.size() > kMaxVertices) throw InputError("too many vertices");
  FacetList norm = facets::normalize(f);
  const VertexSet used = facets::support(norm);
  if (used == 0) throw InputError("complex has no vertices (void complex)");
  if (!bits::subset(used, bits::first(static_cast<unsigned>(universe.size())))) {
    throw InputError("facet mask outside the vertex universe");
  }
  SimplicialComplex c;
  bits::for_each(used, [&](unsigned i) { c.vertices_.push_back(universe[i]); });
  if (used == bits::first(static_cast<unsigned>(universe.size()))) {
    c.facets_ = std::move(norm);
  } else {
    for (VertexSet x : norm) c.facets_.push_back(compress(x, used));
    std::sort(c.facets_.begin(), c.facets_.end());
  }
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet x : facets_) d = std::max(d, bits::count(x) - 1);
  return d;
}

std::optional<unsigned> SimplicialComplex::find(std::string_view label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return std::nullopt;
  return static_cast<unsigned>(it - vertices_.begin());
}

unsigned SimplicialComplex::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

VertexSet SimplicialComplex::mask_of(std::span<const std::string> labels) const {
  VertexSet m = 0;
  for (const auto& l : labels) m |= bits::bit(index_of(l));
  return m;
}

std::vector<std::string> SimplicialComplex::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  bits::for_each(s, [&](unsigned i) { out.push_back(vertices_.at(i)); });
  return out;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  for (VertexSet x : facets_) out.push_back(labels_of(x));
  return out;
}

std::optional<FacetList> SimplicialComplex::facets_over(std::span<const std::string> universe) const {
  std::vector<unsigned> pos(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    auto it = std::lower_bound(universe.begin(), universe.end(), vertices_[i]);
    if (it == universe.end() || *it != vertices_[i]) return std::nullopt;
    pos[i] = static_cast<unsigned>(it - universe.begin());
  }
  FacetList out;
  for (VertexSet x : facets_) {
    VertexSet m = 0;
    bits::for_each(x, [&](unsigned i) { m |= bits::bit(pos[i]); });
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SimplicialComplex::face_count() const { return faces().size(); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (VertexSet s : faces()) ++f[static_cast<std::size_t>(bits::count(s) - 1)];
  return f;
}

SimplicialComplex order_complex(const Poset& p) {
  if (p.empty()) throw InputError("order complex of the empty poset is void");
  return *order_complex(p, p.all());
}

namespace {

void extend_chains(const Poset& p, ElementSet keep, Element top, VertexSet chain, FacetList& out) {
  ElementSet up = p.above(top) & keep;
  bool extended = false;
  bits::for_each(up, [&](unsigned y) {
    // y covers top inside keep.
    if ((p.below(y) & up) == 0) {
      extended = true;
      extend_chains(p, keep, static_cast<Element>(y), chain | bits::bit(y), out);
    }
  });
  if (!extended) out.push_back(chain);
}

}  // namespace

FacetList maximal_chains(const Poset& p, ElementSet keep) {
  keep &= p.all();
  FacetList chains;
  bits::for_each(keep, [&](unsigned x) {
    if ((p.below(x) & keep) == 0) extend_chains(p, keep, static_cast<Element>(x), bits::bit(x), chains);
  });
  std::sort(chains.begin(), chains.end());
  return chains;
}

MaybeComplex order_complex(const Poset& p, ElementSet keep) {
  keep &= p.all();
  if (keep == 0) return std::nullopt;
  return SimplicialComplex::from_masks(p.labels(), maximal_chains(p, keep));
}

MaybeComplex link(const SimplicialComplex& x, std::string_view v) {
  FacetList l = facets::link(x.facets(), x.index_of(v));
  if (l.empty()) return std::nullopt;
  return SimplicialComplex::from_masks(x.vertices(), l);
}

SimplicialComplex delete_vertex(const SimplicialComplex& x, std::string_view v) {
  const unsigned i = x.index_of(v);
  if (x.num_vertices() == 1) throw InputError("deleting the last vertex would leave the void complex");
  return SimplicialComplex::from_masks(x.vertices(), facets::remove_vertex(x.facets(), i));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::span<const std::string> keep) {
  return SimplicialComplex::from_masks(x.vertices(), facets::induced(x.facets(), x.mask_of(keep)));
}

std::vector<std::string> merge_labels(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  std::vector<std::string> common;
  std::set_intersection(x.vertices().begin(), x.vertices().end(), y.vertices().begin(), y.vertices().end(),
                        std::back_inserter(common));
  if (!common.empty()) throw InputError("join: vertex label '" + common.front() + "' occurs in both complexes");
  const auto universe = merge_labels(x.vertices(), y.vertices());
  if (universe.size() > kMaxVertices) throw InputError("join: too many vertices");
  const FacetList fx = *x.facets_over(universe);
  const FacetList fy = *y.facets_over(universe);
  FacetList out;
  for (VertexSet a : fx) {
    for (VertexSet b : fy) out.push_back(a | b);
  }
  return SimplicialComplex::from_masks(universe, out);
}

MaybeComplex join(const MaybeComplex& x, const MaybeComplex& y) {
  if (!x) return y;
  if (!y) return x;
  return join(*x, *y);
}

std::optional<std::string> is_cone(const SimplicialComplex& x) {
  if (auto a = facets::apex(x.facets())) return x.vertices()[*a];
  return std::nullopt;
}

long long reduced_euler(const SimplicialComplex& x) {
  long long chi = -1;
  for (VertexSet s : x.faces()) chi += (bits::count(s) % 2 == 1) ? 1 : -1;
  return chi;
}

long long reduced_euler(const MaybeComplex& x) { return x ? reduced_euler(*x) : -1; }

}  // namespace nec
