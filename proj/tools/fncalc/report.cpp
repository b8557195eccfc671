#include <algorithm>
#include <iomanip>
#include <sstream>

#include "suites.hpp"

namespace fncalc::cli {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

Json check_json(const Check& c) {
  Json j;
  j["check"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  j["tolerance"] = c.tolerance ? Json(*c.tolerance) : Json("exact");
  if (c.samples > 0) j["samples"] = c.samples;
  if (!c.detail.is_null()) j["detail"] = c.detail;
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string render_json(const SuiteReport& report, bool timing) {
  Json j;
  j["suite"] = report.suite;
  j["config"] = report.config;
  for (const auto& [key, value] : report.data.items()) j[key] = value;
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  j["status"] = report.pass() ? "pass" : "fail";
  if (timing) j["timing_ms"] = static_cast<long long>(report.seconds * 1000.0);
  return j.dump(2) + "\n";
}

std::string render_table(const SuiteReport& report, bool timing) {
  std::ostringstream out;
  out << "suite   " << report.suite << "\n";
  std::string config;
  for (const auto& [key, value] : report.config.items()) {
    if (!config.empty()) config += "  ";
    config += key + "=" + scalar_text(value);
  }
  out << "config  " << config << "\n";

  if (report.data.contains("totals") && report.data["totals"].is_object()) {
    out << "\n"
        << std::setw(7) << "degree" << std::setw(12) << "k=0" << std::setw(14) << "k!=0 (C)" << std::setw(14)
        << "k!=0 (R)" << std::setw(14) << "cohomology" << std::setw(10) << "modes" << std::setw(10) << "regular"
        << "\n";
    for (const auto& [degree, t] : report.data["totals"].items()) {
      out << std::setw(7) << degree << std::setw(12) << scalar_text(t["zero_mode_harmonic"]) << std::setw(14)
          << scalar_text(t["nonzero_harmonic_complex"]) << std::setw(14) << scalar_text(t["nonzero_harmonic_real"])
          << std::setw(14) << scalar_text(t["nonzero_cohomology"]) << std::setw(10)
          << scalar_text(t["modes_with_harmonic"]) << std::setw(10) << scalar_text(t["regular"]) << "\n";
    }
  }
  for (const char* key : {"associative", "witness", "canonical", "degree", "sign"}) {
    if (report.data.contains(key)) out << key << "  " << scalar_text(report.data[key]) << "\n";
  }

  out << "\n";
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  for (const auto& c : report.checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(static_cast<int>(width)) << c.name
        << std::right;
    if (c.samples > 0) out << "  n=" << c.samples;
    if (c.tolerance) {
      std::ostringstream t;
      t << *c.tolerance;
      out << "  tol=" << t.str();
    } else {
      out << "  exact";
    }
    if (c.witness) out << "  witness: " << *c.witness;
    out << "\n";
  }
  out << "\nstatus  " << (report.pass() ? "PASS" : "FAIL") << "\n";
  if (timing) out << "time    " << static_cast<long long>(report.seconds * 1000.0) << " ms\n";
  return out.str();
}

}  // namespace fncalc::cli
