#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "fncalc/exterior/model_space.hpp"
#include "fncalc/exterior/text.hpp"
#include "suites.hpp"

namespace {

using fncalc::cli::SuiteConfig;
using fncalc::cli::SuiteReport;

struct Output {
  std::string format = "json";
  bool timing = false;
};

void add_output(CLI::App* app, Output& out) {
  app->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "table"}));
  app->add_flag("--timing", out.timing, "Include wall-clock time (makes output run-dependent)");
}

/// Options each suite understands, beyond --format and --timing.
std::set<std::string> options_for(const std::string& suite) {
  if (suite == "gla-axioms" || suite == "fn-action") return {"seed", "samples"};
  if (suite == "mc-check") return {"psi", "dim"};
  if (suite == "kahler-dc") return {"seed", "samples", "dim"};
  if (suite == "g2-equivariance") return {"seed", "samples", "tolerance"};
  if (suite == "torus-cohomology") return {"psi", "dim", "degree", "max-freq", "threads"};
  if (suite == "symbol-check") return {"psi", "dim", "max-freq", "threads"};
  if (suite == "linfty-jacobi") return {"plane", "max-arity", "samples", "seed"};
  if (suite == "vdata") return {"plane", "samples", "seed"};
  return {};
}

void add_config(CLI::App* app, SuiteConfig& c, const std::set<std::string>& which, std::optional<int>& degree,
                std::optional<int>& dim, std::optional<double>& tol, std::optional<int>& samples) {
  if (which.count("seed")) app->add_option("--seed", c.seed, "Sampling seed");
  if (which.count("samples")) app->add_option("--samples", samples, "Number of random samples");
  if (which.count("tolerance")) app->add_option("--tolerance", tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  if (which.count("psi")) app->add_option("--psi", c.psi, "star-phi, kahler, spin7 or a form string");
  if (which.count("dim")) app->add_option("--dim", dim, "Dimension for kahler or form-string inputs");
  if (which.count("degree")) app->add_option("--degree", degree, "Single form degree to report");
  if (which.count("max-freq")) app->add_option("--max-freq", c.max_freq, "Frequency bound |k|_inf")->check(CLI::NonNegativeNumber);
  if (which.count("threads")) app->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  if (which.count("plane")) app->add_option("--plane", c.plane, "Plane spanned by e_i,e_j,e_k")->delimiter(',');
  if (which.count("max-arity")) app->add_option("--max-arity", c.max_arity, "Highest bracket arity")->check(CLI::Range(1, 6));
}

int emit(const SuiteReport& report, const Output& out) {
  std::cout << (out.format == "table" ? fncalc::cli::render_table(report, out.timing)
                                      : fncalc::cli::render_json(report, out.timing));
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frölicher-Nijenhuis calculus: verification suites and form tools"};
  app.require_subcommand(1);

  struct SuiteCommand {
    SuiteConfig config;
    Output output;
    std::optional<int> degree, dim, samples;
    std::optional<double> tolerance;
  };
  std::map<std::string, SuiteCommand> suites;
  for (const auto& name : fncalc::cli::suite_names()) {
    auto& cmd = suites[name];
    cmd.config.suite = name;
    auto* sub = app.add_subcommand(name, "Run the " + name + " suite");
    add_output(sub, cmd.output);
    add_config(sub, cmd.config, options_for(name), cmd.degree, cmd.dim, cmd.tolerance, cmd.samples);
  }

  SuiteCommand linfty;
  linfty.config.check = "none";
  auto* linfty_cmd = app.add_subcommand("linfty", "Associativity of a coordinate plane and its L-infinity checks");
  add_output(linfty_cmd, linfty.output);
  add_config(linfty_cmd, linfty.config, {"plane", "max-arity", "samples", "seed"}, linfty.degree, linfty.dim,
             linfty.tolerance, linfty.samples);
  linfty_cmd->add_option("--check", linfty.config.check, "Checks to run")
      ->check(CLI::IsMember({"none", "jacobi", "vdata", "all"}));

  std::string text;
  bool vector = false, torus = false;
  std::optional<int> parse_dim, parse_degree;
  Output parse_out;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a form string and print its canonical text");
  parse_cmd->add_option("text", text, "Form or vector-valued form")->required();
  parse_cmd->add_flag("--vector", vector, "Parse a vector-valued form");
  parse_cmd->add_flag("--torus", torus, "Interpret on the torus T^n");
  parse_cmd->add_option("--dim", parse_dim, "Ambient dimension (default: largest label used)");
  parse_cmd->add_option("--degree", parse_degree, "Expected form degree");
  add_output(parse_cmd, parse_out);

  app.add_subcommand("list", "List suite names")->callback([] {
    for (const auto& name : fncalc::cli::suite_names()) std::cout << name << "\n";
  });

  if (argc > 1 && argv[1][0] != '-') {
    const std::string first = argv[1];
    const auto& subs = app.get_subcommands({});
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == first; });
    if (!known) {
      std::cerr << "error: unknown suite or command '" << first << "' (try 'fncalc list')\n";
      return 2;
    }
  }
  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    for (auto& [name, cmd] : suites) {
      if (!app.got_subcommand(name)) continue;
      cmd.config.degree = cmd.degree;
      cmd.config.dim = cmd.dim;
      cmd.config.tolerance = cmd.tolerance;
      cmd.config.samples = cmd.samples;
      return emit(fncalc::cli::run_suite(cmd.config), cmd.output);
    }
    if (app.got_subcommand("linfty")) {
      linfty.config.samples = linfty.samples;
      auto report = fncalc::cli::run_linfty(linfty.config);
      report.seconds = elapsed();
      return emit(report, linfty.output);
    }
    if (app.got_subcommand("parse")) {
      auto report = fncalc::cli::run_parse(text, vector, parse_dim, parse_degree, torus);
      report.seconds = elapsed();
      return emit(report, parse_out);
    }
  } catch (const fncalc::exterior::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
