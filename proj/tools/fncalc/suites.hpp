#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fncalc::cli {

using Json = nlohmann::ordered_json;

/// Names accepted by run_suite, in the order the CLI lists them.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 2024;
  int max_freq = 1;
  std::optional<int> degree;
  std::optional<double> tolerance;
  /// star-phi, kahler, spin7 or a form string; empty selects the suite default.
  std::string psi;
  /// Dimension for kahler or form-string Ψ; inferred from the text when absent.
  std::optional<int> dim;
  std::vector<int> plane{1, 2, 3};
  int max_arity = 3;
  std::optional<int> samples;
  /// linfty only: none, jacobi, vdata or all.
  std::string check = "all";
  unsigned threads = 0;
};

struct Check {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;
  /// Absent for exact checks.
  std::optional<double> tolerance;
  std::size_t samples = 0;
  Json detail;
};

struct SuiteReport {
  std::string suite;
  Json config = Json::object();
  /// Suite-specific fields placed at the top level of the JSON report.
  Json data = Json::object();
  std::vector<Check> checks;
  double seconds = 0.0;

  [[nodiscard]] bool pass() const;
};

/// Throws std::invalid_argument for unknown suites or bad parameters and
/// exterior::ParseError for malformed form strings.
SuiteReport run_suite(const SuiteConfig& config);

/// `linfty` command: associativity of the plane plus the checks selected by
/// config.check.
SuiteReport run_linfty(const SuiteConfig& config);

/// `parse` command: canonical text of a form or vector-valued form.
SuiteReport run_parse(const std::string& text, bool vector, std::optional<int> dim, std::optional<int> degree,
                      bool torus);

std::string render_json(const SuiteReport& report, bool timing);
std::string render_table(const SuiteReport& report, bool timing);

}  // namespace fncalc::cli
