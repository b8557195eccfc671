#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fncalc/exterior/form.hpp"
#include "suites.hpp"

namespace fncalc::cli {

using exterior::DifferentialForm;
using exterior::ModelSpace;

struct PsiChoice {
  std::string label;
  DifferentialForm form;
};

/// Largest coordinate label used in a form string (basis, x-variables,
/// frequency length and ⊗e_i factors).
int infer_dimension(const std::string& text);

/// Resolves --psi. Named structures use their natural dimension; kahler uses
/// `dim` (default `kahler_default`); form strings use `dim` or the inferred one.
PsiChoice resolve_psi(const std::string& psi, std::optional<int> dim, bool torus, int kahler_default);

/// Per-sample failure bookkeeping shared by the property suites.
struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> witness;
  /// Samples whose compared quantities were nonzero, when tracked.
  std::optional<std::size_t> nontrivial;

  void note(bool nonzero) { nontrivial = nontrivial.value_or(0) + (nonzero ? 1 : 0); }
  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (!witness) witness = describe();
    ++failed;
  }
  [[nodiscard]] Check to_check() const {
    Check c;
    c.name = name;
    c.pass = failed == 0;
    c.witness = witness;
    c.samples = checked;
    if (failed > 0) c.detail["failed"] = failed;
    if (nontrivial) c.detail["nonzero_samples"] = *nontrivial;
    return c;
  }
};

inline int sign_of(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

SuiteReport gla_axioms(const SuiteConfig& config);
SuiteReport fn_action(const SuiteConfig& config);
SuiteReport mc_suite(const SuiteConfig& config);
SuiteReport kahler_dc(const SuiteConfig& config);
SuiteReport g2_equivariance(const SuiteConfig& config);
SuiteReport torus_cohomology(const SuiteConfig& config);
SuiteReport symbol_check(const SuiteConfig& config);
SuiteReport linfty_jacobi(const SuiteConfig& config);
SuiteReport vdata(const SuiteConfig& config);

}  // namespace fncalc::cli
