#include "suites.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "common.hpp"
#include "fncalc/exterior/text.hpp"

namespace fncalc::cli {

namespace {

using Runner = SuiteReport (*)(const SuiteConfig&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"gla-axioms", gla_axioms},         {"fn-action", fn_action},
      {"mc-check", mc_suite},             {"kahler-dc", kahler_dc},
      {"g2-equivariance", g2_equivariance}, {"torus-cohomology", torus_cohomology},
      {"symbol-check", symbol_check},     {"linfty-jacobi", linfty_jacobi},
      {"vdata", vdata},
  };
  return table;
}

template <class F>
SuiteReport timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report = f();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gla-axioms",       "fn-action",    "mc-check",
                                              "kahler-dc",        "g2-equivariance", "torus-cohomology",
                                              "symbol-check",     "linfty-jacobi", "vdata"};
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto it = runners().find(config.suite);
  if (it == runners().end()) throw std::invalid_argument("unknown suite '" + config.suite + "'");
  SuiteReport report = timed([&] { return it->second(config); });
  report.suite = config.suite;
  return report;
}

SuiteReport run_parse(const std::string& text, bool vector, std::optional<int> dim, std::optional<int> degree,
                      bool torus) {
  const int n = dim.value_or(infer_dimension(text));
  const auto space = torus ? ModelSpace::toroidal(n) : ModelSpace::affine(n);
  SuiteReport report;
  report.suite = "parse";
  report.config = Json{{"space", space.name()}, {"vector", vector}};
  report.data["input"] = text;
  if (vector) {
    const auto k = exterior::parse_vector_form(text, space, degree);
    report.data["canonical"] = exterior::to_string(k);
    report.data["degree"] = k.degree();
    Json comps = Json::array();
    for (const auto& c : k.components()) comps.push_back(exterior::to_string(c));
    report.data["components"] = comps;
  } else {
    const auto a = exterior::parse_form(text, space, degree);
    report.data["canonical"] = exterior::to_string(a);
    report.data["degree"] = a.degree();
  }
  return report;
}

}  // namespace fncalc::cli
