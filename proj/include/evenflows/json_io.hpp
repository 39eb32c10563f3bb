#pragma once

#include <json.hpp>
#include <string>

#include "evenflows/cohomology.hpp"
#include "evenflows/higgs.hpp"

namespace evenflows::io {

// Field order in emitted JSON is fixed, so identical inputs give
// byte-identical output.
using Json = nlohmann::ordered_json;

// {"n": int, "delta0": {"pt": mult, ...}, "middle": [{"pt": mult, ...}, ...]}
higgs::DivisorTuple divisor_tuple_from_json(const Json& j);
Json divisor_tuple_to_json(const higgs::DivisorTuple& delta);

// {"n": int, "mu": {"pt": [int, ...], ...}}
higgs::WeightMap weight_map_from_json(const Json& j);
Json weight_map_to_json(const higgs::WeightMap& mu);

Json report_to_json(const higgs::ClassificationReport& rep);
Json diagram_report_to_json(const cohomology::DiagramReport& rep);

Json parse(const std::string& text);  // throws std::invalid_argument on bad JSON

}  // namespace evenflows::io
