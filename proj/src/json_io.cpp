#include "evenflows/json_io.hpp"

#include <stdexcept>

namespace evenflows::io {

namespace {

long long require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw std::invalid_argument("expected an integer at " + where);
  return j.get<long long>();
}

higgs::Divisor divisor_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument("expected an object at " + where);
  higgs::Divisor d;
  for (const auto& [pt, mult] : j.items()) d.add(pt, require_int(mult, where + "." + pt));
  return d;
}

Json divisor_to_json(const higgs::Divisor& d) {
  Json j = Json::object();
  for (const auto& [pt, mult] : d.support) j[pt] = mult;
  return j;
}

}  // namespace

higgs::DivisorTuple divisor_tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("delta0") || !j.contains("middle"))
    throw std::invalid_argument("divisor tuple needs fields n, delta0, middle");
  int n = static_cast<int>(require_int(j.at("n"), "n"));
  higgs::Divisor d0 = divisor_from_json(j.at("delta0"), "delta0");
  const auto& mid = j.at("middle");
  if (!mid.is_array()) throw std::invalid_argument("middle must be an array");
  std::vector<higgs::Divisor> middle;
  for (size_t i = 0; i < mid.size(); ++i)
    middle.push_back(divisor_from_json(mid[i], "middle[" + std::to_string(i) + "]"));
  try {
    return higgs::DivisorTuple(n, std::move(d0), std::move(middle));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

Json divisor_tuple_to_json(const higgs::DivisorTuple& delta) {
  Json j;
  j["n"] = delta.n;
  j["delta0"] = divisor_to_json(delta.delta0);
  j["middle"] = Json::array();
  for (const auto& d : delta.middle) j["middle"].push_back(divisor_to_json(d));
  return j;
}

higgs::WeightMap weight_map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("mu"))
    throw std::invalid_argument("weight map needs fields n, mu");
  int n = static_cast<int>(require_int(j.at("n"), "n"));
  if (!j.at("mu").is_object()) throw std::invalid_argument("mu must be an object");
  std::map<higgs::PointLabel, weights::DominantWeight> assignments;
  for (const auto& [pt, coords] : j.at("mu").items()) {
    if (!coords.is_array()) throw std::invalid_argument("mu." + pt + " must be an array");
    std::vector<long long> c;
    for (const auto& v : coords) c.push_back(require_int(v, "mu." + pt));
    try {
      assignments.emplace(pt, weights::DominantWeight(n, std::move(c)));
    } catch (const std::domain_error& e) {
      throw std::invalid_argument("mu." + pt + ": " + e.what());
    }
  }
  try {
    return higgs::WeightMap(n, std::move(assignments));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

Json weight_map_to_json(const higgs::WeightMap& mu) {
  Json j;
  j["n"] = mu.n;
  j["mu"] = Json::object();
  for (const auto& [pt, w] : mu.assignments) j["mu"][pt] = w.coords;
  return j;
}

Json report_to_json(const higgs::ClassificationReport& rep) {
  Json j;
  j["very_stable"] = rep.very_stable;
  j["even_very_stable"] = rep.even_very_stable;
  j["witnesses"] = Json::array();
  for (const auto& w : rep.witnesses) {
    Json wj;
    wj["kind"] = w.kind;
    wj["point"] = w.point;
    wj["indices"] = w.indices;
    j["witnesses"].push_back(std::move(wj));
  }
  return j;
}

Json diagram_report_to_json(const cohomology::DiagramReport& rep) {
  Json j;
  j["case"] = rep.diagram_case.case_name();
  j["params"] = rep.diagram_case.params();
  j["coinvariant_series"] = {{"num", rep.coinvariant_series.num}, {"den", rep.coinvariant_series.den}};
  j["compact_series"] = {{"num", rep.compact_series.num}, {"den", rep.compact_series.den}};
  j["equal"] = rep.equal;
  j["rank"] = rep.rank;
  j["signature"] = rep.signature;
  j["oracle_checked_to_degree"] = rep.oracle_checked_to_degree;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace evenflows::io
