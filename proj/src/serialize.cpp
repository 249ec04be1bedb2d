#include "necollapse/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "necollapse/bits.hpp"
#include "necollapse/error.hpp"

namespace nec::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

// Strips the CLI's {"command", "seed", "result"} envelope.
const Json& payload(const Json& j) {
  if (j.is_object() && j.contains("command") && j.contains("result")) return j.at("result");
  return j;
}

// Unwraps {"key": {...}} envelopes.
const Json& unwrap(const Json& raw, const char* key, const char* marker) {
  const Json& j = payload(raw);
  if (j.is_object() && !j.contains(marker) && j.contains(key)) return j.at(key);
  return j;
}

Json labels_json(const std::vector<std::string>& labels) { return Json(labels); }

Json mask_labels(std::span<const std::string> universe, VertexSet m) {
  Json out = Json::array();
  bits::for_each(m, [&](unsigned i) { out.push_back(universe[i]); });
  return out;
}

}  // namespace

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({p.label(lo), p.label(hi)});
  return {{"elements", labels_json(p.labels())}, {"covers", covers}};
}

Poset poset_from_json(const Json& raw) {
  const Json& j = unwrap(raw, "poset", "elements");
  auto elements = strings_at(field(j, "elements", "poset"), "poset.elements");
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    const Json& c = j.at("covers");
    if (!c.is_array()) fail("poset.covers", "expected an array of pairs");
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::string where = "poset.covers[" + std::to_string(i) + "]";
      auto pair = strings_at(c[i], where);
      if (pair.size() != 2) fail(where, "expected a pair [lower, upper]");
      covers.emplace_back(pair[0], pair[1]);
    }
  }
  return Poset::from_covers(std::move(elements), covers);
}

Json to_json(const Poset& p, const PosetMap& f) {
  Json m = Json::object();
  for (const auto& [k, v] : map_labels(p, f)) m[k] = v;
  return {{"map", m}};
}

PosetMap map_from_json(const Poset& p, const Json& j) {
  const Json& m = field(payload(j), "map", "map file");
  if (!m.is_object()) fail("map", "expected an object from element to element");
  std::map<std::string, std::string> table;
  for (auto it = m.begin(); it != m.end(); ++it) table[it.key()] = string_at(it.value(), "map." + it.key());
  return PosetMap::from_labels(p, table);
}

Json to_json(const Poset& p, const MapFlags& flags) {
  Json j = {{"order_preserving", flags.order_preserving},
            {"monotone", flags.monotone},
            {"increasing", flags.increasing},
            {"decreasing", flags.decreasing}};
  if (flags.incomparable_element) j["incomparable_element"] = p.label(*flags.incomparable_element);
  if (flags.order_violation) {
    j["order_violation"] = {p.label(flags.order_violation->first), p.label(flags.order_violation->second)};
  }
  return j;
}

ElementSet subset_from_json(const Poset& p, const Json& j) {
  const auto labels = strings_at(field(payload(j), "elements", "subset"), "subset.elements");
  return p.set_of(labels);
}

Json to_json(const SimplicialComplex& x) {
  Json facets = Json::array();
  for (const auto& f : x.facet_labels()) facets.push_back(f);
  return {{"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& raw) {
  const Json& j = unwrap(raw, "complex", "facets");
  const Json& f = field(j, "facets", "complex");
  if (!f.is_array()) fail("complex.facets", "expected an array of vertex lists");
  std::vector<std::vector<std::string>> facets;
  for (std::size_t i = 0; i < f.size(); ++i) {
    facets.push_back(strings_at(f[i], "complex.facets[" + std::to_string(i) + "]"));
  }
  return SimplicialComplex::from_facets(facets);
}

Json homology_json(const SimplicialComplex& x) {
  return {{"betti", z2_betti(x)}, {"reduced_euler", reduced_euler(x)}};
}

Json to_json(const Witness& w) {
  if (w.is_point()) return {{"point", w.vertex}};
  if (!w.link || !w.deletion) throw InputError("malformed witness: split node without children");
  return {{"split", {{"v", w.vertex}, {"link", to_json(*w.link)}, {"deletion", to_json(*w.deletion)}}}};
}

namespace {

WitnessPtr witness_at(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a witness object");
  if (j.contains("point")) return Witness::point(string_at(j.at("point"), where + ".point"));
  if (j.contains("split")) {
    const Json& s = j.at("split");
    const std::string w = where + ".split";
    return Witness::split(string_at(field(s, "v", w), w + ".v"), witness_at(field(s, "link", w), w + ".link"),
                          witness_at(field(s, "deletion", w), w + ".deletion"));
  }
  fail(where, "expected \"point\" or \"split\"");
}

}  // namespace

WitnessPtr witness_from_json(const Json& raw) {
  const Json& j = payload(raw);
  const bool wrapped = j.is_object() && j.contains("witness") && !j.contains("point") && !j.contains("split");
  return witness_at(wrapped ? j.at("witness") : j, "witness");
}

Json to_json(const NECertificate& c) {
  Json ws = Json::array();
  for (const auto& w : c.witnesses) ws.push_back(to_json(*w));
  return {{"removed", c.removed}, {"witnesses", ws}};
}

NECertificate certificate_from_json(const Json& raw) {
  const Json& j = unwrap(raw, "certificate", "removed");
  NECertificate c;
  c.removed = strings_at(field(j, "removed", "certificate"), "certificate.removed");
  const Json& ws = field(j, "witnesses", "certificate");
  if (!ws.is_array()) fail("certificate.witnesses", "expected an array");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    c.witnesses.push_back(witness_at(ws[i], "certificate.witnesses[" + std::to_string(i) + "]"));
  }
  if (c.removed.size() != c.witnesses.size()) fail("certificate", "removed and witnesses differ in length");
  return c;
}

Json to_json(const CollapseSequence& s) {
  Json steps = Json::array();
  for (const auto& st : s.steps) {
    steps.push_back({{"free", mask_labels(s.universe, st.free_face)}, {"coface", mask_labels(s.universe, st.coface)}});
  }
  return {{"steps", steps}};
}

CollapseSequence collapse_from_json(const Json& raw) {
  const Json& j = unwrap(raw, "collapse", "steps");
  const Json& steps = field(j, "steps", "collapse");
  if (!steps.is_array()) fail("collapse.steps", "expected an array");
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> labelled;
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string where = "collapse.steps[" + std::to_string(i) + "]";
    auto free = strings_at(field(steps[i], "free", where), where + ".free");
    auto coface = strings_at(field(steps[i], "coface", where), where + ".coface");
    universe.insert(universe.end(), free.begin(), free.end());
    universe.insert(universe.end(), coface.begin(), coface.end());
    labelled.emplace_back(std::move(free), std::move(coface));
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > kMaxVertices) fail("collapse", "too many vertices");
  auto mask = [&](const std::vector<std::string>& labels) {
    VertexSet m = 0;
    for (const auto& l : labels) {
      m |= bits::bit(static_cast<unsigned>(std::lower_bound(universe.begin(), universe.end(), l) - universe.begin()));
    }
    return m;
  };
  CollapseSequence s{universe, {}};
  for (const auto& [free, coface] : labelled) s.steps.push_back({mask(free), mask(coface)});
  return s;
}

Json to_json(const Poset& p, const ReductionReport& r) {
  Json order = Json::array();
  for (Element x : r.removal_order) order.push_back(p.label(x));
  Json j = {{"gamma", to_json(p, r.gamma).at("map")}, {"removal_order", order}, {"certificate", to_json(r.certificate)}};
  if (r.collapse) j["collapse"] = to_json(*r.collapse);
  return j;
}

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Json to_json(const CrapoReport& r) {
  return {{"lhs", integer_json(r.lhs)},
          {"rhs", integer_json(r.rhs)},
          {"equal", r.equal},
          {"case", r.which == CrapoCase::zero_fixed ? "fixed-zero" : "zero-not-fixed"}};
}

}  // namespace nec::json_io
