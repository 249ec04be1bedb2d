#include "necollapse/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "necollapse/bits.hpp"
#include "necollapse/collapse.hpp"
#include "necollapse/complex.hpp"
#include "necollapse/enumerate.hpp"
#include "necollapse/error.hpp"
#include "necollapse/evasiveness.hpp"
#include "necollapse/mobius.hpp"
#include "necollapse/poset.hpp"
#include "necollapse/poset_map.hpp"
#include "necollapse/reduction.hpp"
#include "necollapse/serialize.hpp"

namespace nec::cli {

using json_io::Json;

namespace {


const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::found: return "found";
    case Outcome::absent: return "not-found";
    case Outcome::budget_exceeded: return "budget-exceeded";
  }
  return "";
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::found: return kOk;
    case Outcome::absent: return kNegative;
    case Outcome::budget_exceeded: return kBudget;
  }
  return kNegative;
}

const char* relation_name(PairRelation r) {
  switch (r) {
    case PairRelation::equivalent: return "equivalent";
    case PairRelation::distinct_by_homology: return "distinct-by-homology";
    case PairRelation::not_shown: return "not-shown";
    case PairRelation::undecided: return "undecided";
  }
  return "";
}

std::size_t parse_count(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError(std::string("POSET_COLLAPSE_BUDGET: ") + what + " must be a positive integer");
  }
  try {
    const auto v = std::stoull(s);
    if (v == 0) throw InputError(std::string("POSET_COLLAPSE_BUDGET: ") + what + " must be positive");
    return static_cast<std::size_t>(v);
  } catch (const std::out_of_range&) {
    throw InputError(std::string("POSET_COLLAPSE_BUDGET: ") + what + " out of range");
  }
}

Poset load_poset(const std::string& path) { return json_io::poset_from_json(json_io::read_file(path)); }
SimplicialComplex load_complex(const std::string& path) {
  return json_io::complex_from_json(json_io::read_file(path));
}
PosetMap load_map(const Poset& p, const std::string& path) {
  return json_io::map_from_json(p, json_io::read_file(path));
}

// `fix`, `image`, or a subset file.
ElementSet resolve_sub(const Poset& p, const PosetMap& f, const std::string& sub) {
  if (sub == "fix") return fixed_points(f);
  if (sub == "image") return image(f);
  return json_io::subset_from_json(p, json_io::read_file(sub));
}

struct Inputs {
  std::string poset, map, sub, complex, witness, certificate, collapse, from, to, a, b, c, cert_ab, cert_cb, family;
  unsigned all = 0;
  unsigned random = 0;
  unsigned vertices = 6;
};

// Subcommand body: fills `result` and returns the exit code.
using Handler = std::function<int(const RunConfig&, const Inputs&, Json& result)>;

int classify(const RunConfig&, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  const PosetMap f = load_map(p, in.map);
  r = json_io::to_json(p, f.flags());
  return kOk;
}

int decompose(const RunConfig&, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  const PosetMap f = load_map(p, in.map);
  const auto d = decompose_monotone(p, f);
  r = {{"increasing", json_io::to_json(p, d.increasing).at("map")},
       {"decreasing", json_io::to_json(p, d.decreasing).at("map")}};
  return kOk;
}

int order_complex_cmd(const RunConfig&, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  if (p.empty()) throw InputError("order-complex: the empty poset has the void order complex");
  const SimplicialComplex x = order_complex(p);
  r = json_io::to_json(x);
  r["homology"] = json_io::homology_json(x);
  return kOk;
}

int nonevasive(const RunConfig& cfg, const Inputs& in, Json& r) {
  const SimplicialComplex x = load_complex(in.complex);
  const auto res = is_nonevasive(x, cfg.budget);
  r["nodes"] = res.nodes;
  switch (res.outcome) {
    case Outcome::found:
      r["result"] = "nonevasive";
      r["witness"] = json_io::to_json(*res.witness);
      return kOk;
    case Outcome::absent:
      r["result"] = "evasive";
      return kNegative;
    case Outcome::budget_exceeded:
      r["result"] = "budget-exceeded";
      return kBudget;
  }
  return kNegative;
}

int verify_witness_cmd(const RunConfig&, const Inputs& in, Json& r) {
  const SimplicialComplex x = load_complex(in.complex);
  const WitnessPtr w = json_io::witness_from_json(json_io::read_file(in.witness));
  const bool ok = verify_witness(x, *w);
  r["valid"] = ok;
  return ok ? kOk : kNegative;
}

int verify_certificate_cmd(const RunConfig&, const Inputs& in, Json& r) {
  const SimplicialComplex from = load_complex(in.from);
  const SimplicialComplex to = load_complex(in.to);
  const NECertificate c = json_io::certificate_from_json(json_io::read_file(in.certificate));
  const bool ok = verify_ne_certificate(from, to, c);
  r["valid"] = ok;
  return ok ? kOk : kNegative;
}

int verify_collapse_cmd(const RunConfig&, const Inputs& in, Json& r) {
  const SimplicialComplex from = load_complex(in.from);
  const SimplicialComplex to = load_complex(in.to);
  const CollapseSequence s = json_io::collapse_from_json(json_io::read_file(in.collapse));
  const bool ok = verify_collapse(from, to, s);
  r["valid"] = ok;
  return ok ? kOk : kNegative;
}

int ne_search(const RunConfig& cfg, const Inputs& in, Json& r) {
  const SimplicialComplex from = load_complex(in.from);
  const SimplicialComplex to = load_complex(in.to);
  const auto res = search_ne_reduction(from, to, cfg.budget);
  r["result"] = outcome_name(res.outcome);
  r["nodes"] = res.nodes;
  if (res.certificate) {
    r["certificate"] = json_io::to_json(*res.certificate);
    if (cfg.emit_collapse) r["collapse"] = json_io::to_json(certificate_to_collapse(from, *res.certificate));
  }
  return outcome_code(res.outcome);
}

Json reduction_json(const Poset& p, ElementSet q, const ReductionReport& rep) {
  Json r = json_io::to_json(p, rep);
  Json sub = Json::array();
  bits::for_each(q, [&](unsigned i) { sub.push_back(p.label(i)); });
  r["sub"] = sub;
  return r;
}

int reduce(const RunConfig& cfg, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  const PosetMap f = load_map(p, in.map);
  const ElementSet q = resolve_sub(p, f, in.sub);
  const auto rep = theorem_reduce(p, f, q, {.emit_collapse = cfg.emit_collapse, .self_check = true});
  r = reduction_json(p, q, rep);
  return kOk;
}

int reduce_image(const RunConfig& cfg, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  const PosetMap f = load_map(p, in.map);
  const auto rep = reduce_to_image(p, f, {.emit_collapse = cfg.emit_collapse, .self_check = true});
  r = reduction_json(p, image(f), rep);
  return kOk;
}

int to_collapse(const RunConfig&, const Inputs& in, Json& r) {
  const SimplicialComplex x = load_complex(in.complex);
  const NECertificate c = json_io::certificate_from_json(json_io::read_file(in.certificate));
  r = json_io::to_json(certificate_to_collapse(x, c));
  return kOk;
}

int collapse_search(const RunConfig& cfg, const Inputs& in, Json& r) {
  const SimplicialComplex from = load_complex(in.from);
  const auto res = in.to.empty() ? search_collapse_to_point(from, cfg.budget)
                                 : search_collapse(from, load_complex(in.to), cfg.budget);
  r["result"] = outcome_name(res.outcome);
  r["nodes"] = res.nodes;
  if (res.sequence) r["collapse"] = json_io::to_json(*res.sequence);
  return outcome_code(res.outcome);
}

int mobius(const RunConfig&, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  const MobiusTable mu(p);
  Json table = Json::object();
  for (Element x = 0; x < p.size(); ++x) {
    Json row = Json::object();
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) row[p.label(y)] = json_io::integer_json(mu(x, y));
    }
    table[p.label(x)] = row;
  }
  r["mobius"] = table;
  return kOk;
}

int hall(const RunConfig&, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  const HallReport h = hall_check(p);
  r = {{"mobius", json_io::integer_json(h.mobius)}, {"reduced_euler", h.reduced_euler}, {"holds", h.holds}};
  return h.holds ? kOk : kNegative;
}

int crapo(const RunConfig&, const Inputs& in, Json& r) {
  const Poset p = load_poset(in.poset);
  const PosetMap f = load_map(p, in.map);
  const ElementSet q = resolve_sub(p, f, in.sub);
  const CrapoReport c = crapo_check(p, f, q);
  r = json_io::to_json(c);
  return c.equal ? kOk : kNegative;
}

int expansion(const RunConfig&, const Inputs& in, Json& r) {
  const SimplicialComplex a = load_complex(in.a);
  const SimplicialComplex b = load_complex(in.b);
  const SimplicialComplex c = load_complex(in.c);
  const NECertificate ab = json_io::certificate_from_json(json_io::read_file(in.cert_ab));
  const NECertificate cb = json_io::certificate_from_json(json_io::read_file(in.cert_cb));
  const CommonExpansion e = common_expansion(a, b, c, ab, cb);
  r = {{"expansion", json_io::to_json(e.expansion)},
       {"to_c", json_io::to_json(e.to_c)},
       {"to_a", json_io::to_json(e.to_a)}};
  return kOk;
}

std::vector<SimplicialComplex> family_of(const RunConfig& cfg, const Inputs& in) {
  std::vector<SimplicialComplex> out;
  const int sources = int(!in.family.empty()) + int(in.all != 0) + int(in.random != 0);
  if (sources != 1) throw InputError("enumerate: give exactly one of --family, --all, --random");
  if (!in.family.empty()) {
    const Json j = json_io::read_file(in.family);
    const Json& list = j.is_object() && j.contains("complexes") ? j.at("complexes") : j;
    if (!list.is_array()) throw InputError(in.family + ": expected an array of complexes");
    for (const auto& c : list) out.push_back(json_io::complex_from_json(c));
  } else if (in.all != 0) {
    if (in.all > 5) throw InputError("enumerate: --all is limited to 5 vertices");
    // One representative per isomorphism class, first in enumeration order.
    std::set<FacetList> seen;
    for_each_complex(in.all, [&](const SimplicialComplex& x) {
      if (seen.insert(canonical_form(x.facets(), static_cast<unsigned>(x.num_vertices()))).second) {
        out.push_back(x);
      }
    });
  } else {
    if (in.vertices == 0 || in.vertices > 8) throw InputError("enumerate: --vertices must be in 1..8");
    std::mt19937_64 rng(cfg.seed);
    const auto labels = default_labels(in.vertices);
    std::uniform_int_distribution<unsigned> facets(1, 4);
    for (unsigned i = 0; i < in.random; ++i) out.push_back(random_complex(rng, labels, facets(rng)));
  }
  return out;
}

int enumerate(const RunConfig& cfg, const Inputs& in, Json& r) {
  const auto family = family_of(cfg, in);
  const NEClassification cls = classify_ne_equivalence(family, cfg.budget);
  Json complexes = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    Json c = json_io::to_json(family[i]);
    c["class"] = cls.class_of[i];
    c["betti"] = z2_betti(family[i]);
    if (cls.truncated[i]) c["truncated"] = true;
    complexes.push_back(c);
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < family.size(); ++i) classes[cls.class_of[i]].push_back(i);
  Json class_list = Json::array();
  for (const auto& [rep, members] : classes) class_list.push_back(members);
  // Relations between class representatives only; members share them.
  Json pairs = Json::array();
  std::map<std::string, std::size_t> counts;
  for (auto i = classes.begin(); i != classes.end(); ++i) {
    for (auto j = std::next(i); j != classes.end(); ++j) {
      const char* rel = relation_name(cls.relation[i->first][j->first]);
      ++counts[rel];
      pairs.push_back({{"a", i->first}, {"b", j->first}, {"relation", rel}});
    }
  }
  r = {{"complexes", complexes}, {"classes", class_list}, {"pairs", pairs}, {"summary", counts}};
  const bool truncated = std::any_of(cls.truncated.begin(), cls.truncated.end(), [](bool t) { return t; });
  return truncated ? kBudget : kOk;
}

}  // namespace

SearchBudget parse_budget(const std::string& text, SearchBudget defaults) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    defaults.max_nodes = parse_count(text, "node budget");
    return defaults;
  }
  defaults.max_vertices = parse_count(text.substr(0, colon), "vertex budget");
  defaults.max_nodes = parse_count(text.substr(colon + 1), "node budget");
  return defaults;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonevasiveness, NE-reductions and collapses of order complexes"};
  app.name("necollapse");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  Inputs in;
  std::size_t budget_nodes = 0;
  std::size_t budget_vertices = 0;
  int verbose = 0;
  app.add_option("--budget-nodes", budget_nodes, "Search node budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-vertices", budget_vertices, "Largest complex searched exhaustively")
      ->check(CLI::PositiveNumber);
  app.add_flag("--emit-collapse", cfg.emit_collapse, "Include an elementary collapse sequence");
  app.add_option("-o,--output", cfg.output, "Write the JSON result to this file");
  app.add_option("--seed", cfg.seed, "Seed for randomized families");
  app.add_flag("-v,--verbose", verbose, "Report search statistics on stderr");

  std::map<CLI::App*, Handler> handlers;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = std::move(h);
    return s;
  };
  auto need = [](CLI::App* s, const char* flag, std::string& target, const char* help) {
    s->add_option(flag, target, help)->required();
  };

  auto* s = sub("classify-map", "Classify a self-map of a poset", classify);
  need(s, "--poset", in.poset, "Poset file");
  need(s, "--map", in.map, "Map file");
  s = sub("decompose", "Write a monotone map as increasing after decreasing", decompose);
  need(s, "--poset", in.poset, "Poset file");
  need(s, "--map", in.map, "Map file");
  s = sub("order-complex", "Order complex and its homology", order_complex_cmd);
  need(s, "--poset", in.poset, "Poset file");
  s = sub("nonevasive", "Decide nonevasiveness with a witness", nonevasive);
  need(s, "--complex", in.complex, "Complex file");
  s = sub("verify-witness", "Check a nonevasiveness witness", verify_witness_cmd);
  need(s, "--complex", in.complex, "Complex file");
  need(s, "--witness", in.witness, "Witness file");
  s = sub("verify-certificate", "Check an NE-reduction certificate", verify_certificate_cmd);
  need(s, "--from", in.from, "Source complex");
  need(s, "--to", in.to, "Target complex");
  need(s, "--certificate", in.certificate, "Certificate file");
  s = sub("verify-collapse", "Check an elementary collapse sequence", verify_collapse_cmd);
  need(s, "--from", in.from, "Source complex");
  need(s, "--to", in.to, "Target complex");
  need(s, "--collapse", in.collapse, "Collapse file");
  s = sub("ne-search", "Search for an NE-reduction onto an induced subcomplex", ne_search);
  need(s, "--from", in.from, "Source complex");
  need(s, "--to", in.to, "Target complex");
  s = sub("reduce", "NE-reduce the order complex along a monotone map", reduce);
  need(s, "--poset", in.poset, "Poset file");
  need(s, "--map", in.map, "Map file");
  need(s, "--sub", in.sub, "fix, image, or a subset file");
  s = sub("reduce-to-image", "NE-reduce the order complex onto the image of a monotone map", reduce_image);
  need(s, "--poset", in.poset, "Poset file");
  need(s, "--map", in.map, "Map file");
  s = sub("to-collapse", "Compile an NE-reduction certificate into elementary collapses", to_collapse);
  need(s, "--complex", in.complex, "Source complex");
  need(s, "--certificate", in.certificate, "Certificate file");
  s = sub("collapse-search", "Search for an elementary collapse sequence", collapse_search);
  need(s, "--from", in.from, "Source complex");
  s->add_option("--to", in.to, "Target subcomplex (default: any single vertex)");
  s = sub("mobius", "Möbius function table", mobius);
  need(s, "--poset", in.poset, "Poset file");
  s = sub("hall-check", "Compare μ(0̂,1̂) with the reduced Euler characteristic of the proper part", hall);
  need(s, "--poset", in.poset, "Poset file");
  s = sub("crapo-check", "Check the complementation formula for an increasing map", crapo);
  need(s, "--poset", in.poset, "Poset file");
  need(s, "--map", in.map, "Map file");
  need(s, "--sub", in.sub, "fix, image, or a subset file");
  s = sub("common-expansion", "Merge A ↘NE B ↗NE C into a common expansion", expansion);
  need(s, "--a", in.a, "Complex A");
  need(s, "--b", in.b, "Complex B");
  need(s, "--c", in.c, "Complex C");
  need(s, "--cert-ab", in.cert_ab, "Certificate A ↘NE B");
  need(s, "--cert-cb", in.cert_cb, "Certificate C ↘NE B");
  s = sub("enumerate", "Explore NE-equivalence classes of small complexes", enumerate);
  s->add_option("--family", in.family, "File with {\"complexes\": [...]}");
  s->add_option("--all", in.all, "All complexes on up to N vertices, up to isomorphism");
  s->add_option("--random", in.random, "K random complexes (uses --seed)");
  s->add_option("--vertices", in.vertices, "Vertex pool for --random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.verbosity = verbose;
  try {
    if (const char* env = std::getenv("POSET_COLLAPSE_BUDGET"); env != nullptr && *env != '\0') {
      cfg.budget = parse_budget(env, cfg.budget);
    }
    if (budget_nodes != 0) cfg.budget.max_nodes = budget_nodes;
    if (budget_vertices != 0) cfg.budget.max_vertices = budget_vertices;

    Json result;
    const int code = handlers.at(chosen)(cfg, in, result);
    const Json doc = {{"command", chosen->get_name()}, {"seed", cfg.seed}, {"result", result}};
    const std::string text = doc.dump(2) + "\n";
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw InputError(cfg.output + ": cannot write file");
      file << text;
    }
    if (cfg.verbosity > 0) {
      err << chosen->get_name() << ": exit " << code << " (budget " << cfg.budget.max_vertices << " vertices, "
          << cfg.budget.max_nodes << " nodes)\n";
    }
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace nec::cli
