#include <stdexcept>

#include "common.hpp"
#include "fncalc/exterior/text.hpp"
#include "fncalc/linfty/brackets.hpp"

namespace fncalc::cli {

using linfty::CheckCount;
using linfty::FlatAssociativeModel;

namespace {

Check from_count(const std::string& name, const CheckCount& c) {
  Check out;
  out.name = name;
  out.pass = c.ok();
  out.samples = c.checked;
  if (!c.ok()) {
    out.witness = c.first_failure;
    out.detail = Json{{"failed", c.failed}};
  }
  return out;
}

Json plane_json(const FlatAssociativeModel& m) {
  Json p = Json::array();
  for (int i : m.plane()) p.push_back(i + 1);
  return p;
}

void add_classification(SuiteReport& report) {
  // Two coordinate associative planes and one that is not.
  const std::vector<std::pair<std::vector<int>, bool>> planes{{{1, 2, 3}, true}, {{1, 4, 5}, true}, {{1, 2, 4}, false}};
  for (const auto& [labels, expected] : planes) {
    const FlatAssociativeModel m(labels);
    const auto r = linfty::is_associative(m);
    Check c;
    c.name = "associativity[" + m.plane_label() + "]";
    c.pass = r.associative == expected;
    if (!r.associative) c.witness = linfty::to_string(m, r.witness);
    c.detail = Json{{"associative", r.associative}};
    report.checks.push_back(c);
  }
}

void add_jacobi(SuiteReport& report, const FlatAssociativeModel& m, const SuiteConfig& config, int samples) {
  const auto j = linfty::jacobi_suite(m, config.max_arity, samples, config.seed);
  for (std::size_t n = 0; n < j.by_arity.size(); ++n) {
    report.checks.push_back(from_count("generalized-jacobi[n=" + std::to_string(n + 1) + "]", j.by_arity[n]));
  }
  for (std::size_t n = 0; n < j.explicit_form.size(); ++n) {
    report.checks.push_back(from_count("written-identity[n=" + std::to_string(n + 1) + "]", j.explicit_form[n]));
  }
  report.checks.push_back(from_count("graded-symmetry", j.symmetry));
  report.checks.push_back(from_count("multibracket-equals-lie-form", j.lie_agreement));
  Json nonzero = Json::object();
  for (std::size_t k = 0; k < j.nonzero_brackets.size(); ++k) nonzero["m" + std::to_string(k + 1)] = j.nonzero_brackets[k];
  report.data["nonzero_brackets"] = nonzero;
}

void add_vdata(SuiteReport& report, const FlatAssociativeModel& m, const SuiteConfig& config) {
  const auto v = linfty::vdata_check(m, config.seed, config.samples.value_or(20));
  report.checks.push_back(from_count("lift-image-abelian", v.abelian));
  report.checks.push_back(from_count("kernel-closed", v.kernel_closed));
  Check sq;
  sq.name = "chi-square-zero";
  sq.pass = v.chi_square_zero;
  report.checks.push_back(sq);
  Check in;
  in.name = "chi-in-kernel";
  in.pass = v.chi_in_kernel;
  if (!in.pass) in.witness = linfty::to_string(m, linfty::is_associative(m).witness);
  report.checks.push_back(in);
}

FlatAssociativeModel model_of(const SuiteConfig& config) {
  if (config.plane.size() != 3) throw std::invalid_argument("--plane needs three labels, e.g. 1,2,3");
  return FlatAssociativeModel(config.plane);
}

}  // namespace

SuiteReport linfty_jacobi(const SuiteConfig& config) {
  const auto m = model_of(config);
  const int samples = config.samples.value_or(20);
  SuiteReport report;
  report.config = Json{{"plane", plane_json(m)}, {"max_arity", config.max_arity}, {"samples", samples}, {"seed", config.seed}};
  report.data["associative"] = linfty::is_associative(m).associative;
  add_classification(report);
  add_jacobi(report, m, config, samples);
  return report;
}

SuiteReport vdata(const SuiteConfig& config) {
  const auto m = model_of(config);
  SuiteReport report;
  report.config = Json{{"plane", plane_json(m)}, {"samples", config.samples.value_or(20)}, {"seed", config.seed}};
  add_vdata(report, m, config);
  return report;
}

SuiteReport run_linfty(const SuiteConfig& config) {
  const auto m = model_of(config);
  const auto assoc = linfty::is_associative(m);
  SuiteReport report;
  report.suite = "linfty";
  report.config = Json{{"plane", plane_json(m)}, {"check", config.check}};
  if (config.check != "none") {
    report.config["max_arity"] = config.max_arity;
    report.config["seed"] = config.seed;
  }
  report.data["plane"] = plane_json(m);
  report.data["associative"] = assoc.associative;
  report.data["witness"] = assoc.associative ? Json(nullptr) : Json(linfty::to_string(m, assoc.witness));
  if (config.check == "jacobi" || config.check == "all") add_jacobi(report, m, config, config.samples.value_or(20));
  if (config.check == "vdata" || config.check == "all") add_vdata(report, m, config);
  if (config.check != "none" && config.check != "jacobi" && config.check != "vdata" && config.check != "all") {
    throw std::invalid_argument("--check must be none, jacobi, vdata or all");
  }
  return report;
}

}  // namespace fncalc::cli
