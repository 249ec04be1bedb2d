#pragma once

#include <json.hpp>
#include <string>

#include "necollapse/collapse.hpp"
#include "necollapse/complex.hpp"
#include "necollapse/evasiveness.hpp"
#include "necollapse/mobius.hpp"
#include "necollapse/poset.hpp"
#include "necollapse/poset_map.hpp"
#include "necollapse/reduction.hpp"

// JSON encodings of every object the CLI reads or writes. Parsers throw
// InputError naming the offending field; documents that wrap an object under
// its own key (e.g. {"witness": {...}} as printed by the CLI) are accepted.
namespace nec::json_io {

using Json = nlohmann::json;

Json parse_text(const std::string& text, const std::string& source);
Json read_file(const std::string& path);

Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json to_json(const Poset& p, const PosetMap& f);
PosetMap map_from_json(const Poset& p, const Json& j);
Json to_json(const Poset& p, const MapFlags& flags);

// {"elements": [...]}
ElementSet subset_from_json(const Poset& p, const Json& j);

Json to_json(const SimplicialComplex& x);
SimplicialComplex complex_from_json(const Json& j);
Json homology_json(const SimplicialComplex& x);

Json to_json(const Witness& w);
WitnessPtr witness_from_json(const Json& j);

Json to_json(const NECertificate& c);
NECertificate certificate_from_json(const Json& j);

Json to_json(const CollapseSequence& s);
CollapseSequence collapse_from_json(const Json& j);

Json to_json(const Poset& p, const ReductionReport& r);
Json to_json(const CrapoReport& r);

Json integer_json(const Integer& v);

}  // namespace nec::json_io
