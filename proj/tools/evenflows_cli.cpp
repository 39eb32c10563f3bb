// Command-line surface: fixed-point classification, weight order tests,
// Poincare polynomials, Hitchin multiplicities and diagram verification,
// with deterministic text or JSON output.
//
// Exit codes: 0 success, 1 malformed input, 2 internal cross-check
// disagreement, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evenflows/cohomology.hpp"
#include "evenflows/errors.hpp"
#include "evenflows/higgs.hpp"
#include "evenflows/json_io.hpp"
#include "evenflows/weights.hpp"
#include "evenflows/weyl.hpp"

namespace {

using evenflows::io::Json;
namespace weights = evenflows::weights;
namespace higgs = evenflows::higgs;
namespace weyl = evenflows::weyl;
namespace cohomology = evenflows::cohomology;

std::vector<long long> parse_csv_ints(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& j, const std::string& format, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

struct MinusculeArgs {
  int n = 0;
  std::string weight;
  std::string mode = "both";
  long long oracle_bound = 0;  // 0 = derive from the weight
};

int cmd_minuscule(const MinusculeArgs& a, const std::string& format) {
  weights::DominantWeight lambda(a.n, parse_csv_ints(a.weight));
  const long long bound = a.oracle_bound > 0 ? a.oracle_bound : weights::default_oracle_bound(lambda);
  bool closed = false, oracle = false, verdict = false;
  if (a.mode == "closed" || a.mode == "both") closed = weights::is_even_minuscule(lambda);
  if (a.mode == "oracle" || a.mode == "both") oracle = weights::is_even_minuscule_oracle(lambda, bound);
  if (a.mode == "closed")
    verdict = closed;
  else if (a.mode == "oracle")
    verdict = oracle;
  else if (a.mode == "both") {
    if (closed != oracle)
      throw evenflows::InvariantBreach("closed-form and oracle verdicts disagree for this weight");
    verdict = closed;
  } else {
    throw std::invalid_argument("mode must be closed, oracle or both");
  }
  Json j;
  j["n"] = a.n;
  j["weight"] = lambda.coords;
  j["mode"] = a.mode;
  j["even_minuscule"] = verdict;
  if (a.mode != "closed") j["oracle_bound"] = bound;
  emit(j, format, std::string(verdict ? "even minuscule" : "not even minuscule") + "\n");
  return 0;
}

int cmd_classify(const std::string& input, const std::string& format) {
  const higgs::DivisorTuple delta =
      evenflows::io::divisor_tuple_from_json(evenflows::io::parse(read_input(input)));
  const auto rep = higgs::classify(delta);
  if (rep.even_very_stable != higgs::classify_via_weights(delta))
    throw evenflows::InvariantBreach(
        "divisor-side and weight-side even very stable verdicts disagree");
  std::ostringstream text;
  text << "very stable: " << (rep.very_stable ? "yes" : "no") << "\n";
  text << "even very stable: " << (rep.even_very_stable ? "yes" : "no") << "\n";
  for (const auto& w : rep.witnesses) {
    text << "witness: " << w.kind << " at " << w.point << " (index";
    for (size_t i = 0; i < w.indices.size(); ++i) text << (i ? "," : " ") << w.indices[i];
    text << ")\n";
  }
  emit(evenflows::io::report_to_json(rep), format, text.str());
  return 0;
}

int cmd_hecke(const std::string& input, const std::string& format) {
  const higgs::WeightMap mu =
      evenflows::io::weight_map_from_json(evenflows::io::parse(read_input(input)));
  const auto path = higgs::hecke_path(mu);
  higgs::DivisorTuple acc = higgs::DivisorTuple::zero(mu.n);
  for (const auto& op : path) acc = higgs::apply_hecke(acc, op);
  if (!(acc == higgs::delta_from_mu(mu)))
    throw evenflows::InvariantBreach("Hecke replay does not reproduce the divisor tuple");
  Json j;
  j["n"] = mu.n;
  j["operations"] = Json::array();
  for (const auto& op : path) j["operations"].push_back({{"point", op.point}, {"index", op.index}});
  j["result"] = evenflows::io::divisor_tuple_to_json(acc);
  std::ostringstream text;
  text << path.size() << " elementary operation(s)\n";
  for (const auto& op : path) text << "  (" << op.point << ", " << op.index << ")\n";
  emit(j, format, text.str());
  return 0;
}

int cmd_poincare(const std::string& pair_spec, const std::string& format) {
  const weyl::HomogeneousPair pair = weyl::parse_pair(pair_spec);
  const auto poly = weyl::poincare_polynomial(pair);
  Json j;
  j["pair"] = pair.ambient.name() + "/" + pair.subgroup.name();
  j["poincare"] = poly.coeffs;
  j["euler_characteristic"] = poly.eval(1);
  j["signature"] = poly.eval(-1);
  std::ostringstream text;
  text << "P(q) =";
  for (size_t d = 0; d < poly.coeffs.size(); ++d) {
    if (poly.coeffs[d] == 0) continue;
    text << " " << (d ? "+ " : "") << poly.coeffs[d];
    if (d) text << " q^" << d;
  }
  text << "\nchi = " << poly.eval(1) << "\nsignature = " << poly.eval(-1) << "\n";
  emit(j, format, text.str());
  return 0;
}

int cmd_multiplicity(int n, int k, bool even, const std::string& format) {
  const long long m = even ? higgs::even_hitchin_multiplicity(n, k) : higgs::hitchin_multiplicity(n, k);
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["even"] = even;
  j["multiplicity"] = m;
  emit(j, format, std::to_string(m) + "\n");
  return 0;
}

cohomology::DiagramCase make_case(const std::string& name, int n, int k) {
  using DC = cohomology::DiagramCase;
  if (name == "quaternionic") return DC::quaternionic(n, k);
  if (name == "sphere") return DC::sphere(n);
  if (name == "cayley") return DC::cayley();
  if (name == "real_grassmannian") return DC::real_grassmannian(n, k);
  if (name == "so4n") return DC::so4n(n);
  throw std::invalid_argument("unknown case '" + name + "'");
}

std::vector<cohomology::DiagramCase> all_cases() {
  using DC = cohomology::DiagramCase;
  std::vector<DC> cases;
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k) cases.push_back(DC::quaternionic(n, k));
  for (int n = 1; n <= 3; ++n) cases.push_back(DC::sphere(n));
  cases.push_back(DC::cayley());
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) cases.push_back(DC::real_grassmannian(n, k));
  for (int n = 1; n <= 3; ++n) cases.push_back(DC::so4n(n));
  return cases;
}

std::string diagram_text(const cohomology::DiagramReport& rep) {
  std::ostringstream text;
  text << rep.diagram_case.case_name();
  for (int p : rep.diagram_case.params()) text << " " << p;
  text << ": coinvariant " << rep.coinvariant_series.str() << " | compact "
       << rep.compact_series.str() << " | equal=" << (rep.equal ? "true" : "false")
       << " rank=" << rep.rank << " signature=" << rep.signature;
  if (rep.oracle_checked_to_degree > 0)
    text << " oracle<=" << rep.oracle_checked_to_degree;
  text << "\n";
  return text.str();
}

int cmd_verify(const std::string& case_name, int n, int k, bool all, int oracle_degree,
               const std::string& format) {
  std::vector<cohomology::DiagramCase> cases;
  if (all)
    cases = all_cases();
  else
    cases.push_back(make_case(case_name, n, k));

  std::vector<cohomology::DiagramReport> reports(cases.size());
  std::vector<std::string> errors(cases.size());
  std::vector<int> error_kinds(cases.size(), 0);  // 1 input, 2 breach, 3 resource
// Cases are independent; results are collected back in case order.
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(cases.size()); ++i) {
    try {
      reports[static_cast<size_t>(i)] =
          cohomology::verify_diagram(cases[static_cast<size_t>(i)], oracle_degree);
    } catch (const evenflows::ResourceLimit& e) {
      errors[static_cast<size_t>(i)] = e.what();
      error_kinds[static_cast<size_t>(i)] = 3;
    } catch (const evenflows::InvariantBreach& e) {
      errors[static_cast<size_t>(i)] = e.what();
      error_kinds[static_cast<size_t>(i)] = 2;
    } catch (const std::exception& e) {
      errors[static_cast<size_t>(i)] = e.what();
      error_kinds[static_cast<size_t>(i)] = 1;
    }
  }
  for (size_t i = 0; i < cases.size(); ++i) {
    if (error_kinds[i] == 3) throw evenflows::ResourceLimit(errors[i]);
    if (error_kinds[i] == 2) throw evenflows::InvariantBreach(errors[i]);
    if (error_kinds[i] == 1) throw std::invalid_argument(errors[i]);
  }

  Json j = all ? Json::array() : Json();
  std::ostringstream text;
  for (const auto& rep : reports) {
    if (all)
      j.push_back(evenflows::io::diagram_report_to_json(rep));
    else
      j = evenflows::io::diagram_report_to_json(rep);
    text << diagram_text(rep);
  }
  emit(j, format, text.str());
  bool all_equal = true;
  for (const auto& rep : reports) all_equal &= rep.equal;
  if (!all_equal) throw evenflows::InvariantBreach("a diagram comparison failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of even very stable fixed-point classification and "
               "equivariant-cohomology models of the Hitchin map"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--output", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  MinusculeArgs margs;
  auto* minuscule = app.add_subcommand("minuscule", "Test a dominant weight for even minusculity");
  minuscule->fallthrough();
  minuscule->add_option("--n", margs.n, "Rank")->required();
  minuscule->add_option("--weight", margs.weight, "Comma-separated coordinates")->required();
  minuscule->add_option("--mode", margs.mode, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}))
      ->capture_default_str();
  minuscule->add_option("--oracle-bound", margs.oracle_bound,
                        "Search bound for the oracle (default: derived from the weight)");

  std::string classify_input;
  auto* classify = app.add_subcommand("classify", "Classify a divisor tuple from JSON");
  classify->fallthrough();
  classify->add_option("--input", classify_input, "Input file, or - for stdin")->required();

  std::string hecke_input;
  auto* hecke = app.add_subcommand("hecke", "Expand a weight map into elementary Hecke operations");
  hecke->fallthrough();
  hecke->add_option("--input", hecke_input, "Input file, or - for stdin")->required();

  std::string pair_spec;
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of an equal-rank pair");
  poincare->fallthrough();
  poincare->add_option("--pair", pair_spec, "Pair spec such as GL4/GL2xGL2")->required();

  int mult_n = 0, mult_k = 0;
  bool mult_even = false;
  auto* multiplicity = app.add_subcommand("multiplicity", "Hitchin map multiplicity on a flow");
  multiplicity->fallthrough();
  multiplicity->add_option("--n", mult_n, "Rank")->required();
  multiplicity->add_option("--k", mult_k, "Index")->required();
  multiplicity->add_flag("--even", mult_even, "Multiplicity on the even upward flow");

  std::string case_name;
  int case_n = 0, case_k = 0, oracle_degree = 10;
  bool verify_all = false;
  auto* verify = app.add_subcommand("verify", "Verify a coinvariant/compact diagram case");
  verify->fallthrough();
  verify->add_option("--case", case_name,
                     "quaternionic, sphere, cayley, real_grassmannian or so4n");
  verify->add_option("--n", case_n, "Case parameter n");
  verify->add_option("--k", case_k, "Case parameter k");
  verify->add_flag("--all", verify_all, "Run the full desk-scale case grid");
  verify->add_option("--oracle-degree", oracle_degree, "Oracle certification degree")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    evenflows::weyl::self_check();
    if (minuscule->parsed()) return cmd_minuscule(margs, format);
    if (classify->parsed()) return cmd_classify(classify_input, format);
    if (hecke->parsed()) return cmd_hecke(hecke_input, format);
    if (poincare->parsed()) return cmd_poincare(pair_spec, format);
    if (multiplicity->parsed()) return cmd_multiplicity(mult_n, mult_k, mult_even, format);
    if (verify->parsed()) {
      if (!verify_all && case_name.empty())
        throw std::invalid_argument("verify needs --case or --all");
      return cmd_verify(case_name, case_n, case_k, verify_all, oracle_degree, format);
    }
  } catch (const evenflows::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const evenflows::InvariantBreach& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
