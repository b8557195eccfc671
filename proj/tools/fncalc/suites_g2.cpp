#include <Eigen/Dense>

#include "common.hpp"
#include "fncalc/exterior/bracket.hpp"
#include "fncalc/exterior/sampling.hpp"
#include "fncalc/exterior/text.hpp"
#include "fncalc/g2/pointwise.hpp"
#include "fncalc/g2/projections.hpp"
#include "fncalc/g2/structure.hpp"
#include "fncalc/linalg/elimination.hpp"

namespace fncalc::cli {

using exact::ExactScalar;
using exact::Rational;
using g2::NumericForm;
using g2::NumericVectorForm;
using g2::Square7;

namespace {

NumericVectorForm numeric_of(const exterior::VectorValuedForm& k) {
  NumericVectorForm out(k.space().dim, k.degree());
  for (int i = 0; i < k.space().dim; ++i) out.components[static_cast<std::size_t>(i)] = g2::to_numeric(k.component(i));
  return out;
}

double determinant(const Square7& a) {
  Eigen::Matrix<double, 7, 7> m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m.determinant();
}

/// I + E with entries of E in {p/q : |p| <= 1, 2 <= q <= 4}, redrawn until det >= 1/4.
Square7 random_gl_plus(exterior::Sampler& rng) {
  for (;;) {
    Square7 a{};
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) {
        const double e = static_cast<double>(rng.integer(-1, 1)) / rng.integer(2, 4);
        a[i][j] = (i == j ? 1.0 : 0.0) + e;
      }
    }
    if (determinant(a) >= 0.25) return a;
  }
}

std::string matrix_text(const Square7& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < 7; ++i) {
    out += i ? ";" : "";
    for (std::size_t j = 0; j < 7; ++j) out += (j ? " " : "") + std::to_string(a[i][j]);
  }
  return out + "]";
}

double max_diff(const Square7& a, const Square7& b) {
  double d = 0;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

Check tolerance_check(const std::string& name, double error, double tol) {
  Check c;
  c.name = name;
  c.pass = error <= tol;
  c.tolerance = tol;
  c.detail = Json{{"max_error", error}};
  return c;
}

}  // namespace

SuiteReport g2_equivariance(const SuiteConfig& config) {
  const int samples = config.samples.value_or(20);
  const double tol = config.tolerance.value_or(1e-9);
  const auto r7 = ModelSpace::affine(7);
  const auto standard = g2::standard_phi(r7);
  const NumericForm phi = g2::to_numeric(standard.phi);
  const NumericVectorForm c_phi = g2::cayley_map(phi);

  SuiteReport report;
  report.config = Json{{"seed", config.seed}, {"samples", samples}, {"tolerance", tol}};

  // 𝔠(A*φ) = A*𝔠(φ).
  exterior::Sampler rng(config.seed + 900);
  Check equiv;
  equiv.name = "cayley-equivariance";
  equiv.tolerance = tol;
  equiv.samples = static_cast<std::size_t>(samples);
  double worst = 0;
  std::optional<Square7> last;
  for (int s = 0; s < samples; ++s) {
    const Square7 a = random_gl_plus(rng);
    const double err = g2::cayley_map(g2::pullback(a, phi)).distance(g2::pullback(a, c_phi));
    if (err > worst) worst = err;
    if (err > tol && !equiv.witness) equiv.witness = "A=" + matrix_text(a);
    last = a;
  }
  equiv.pass = worst <= tol;
  equiv.detail = Json{{"max_error", worst}};
  report.checks.push_back(equiv);

  // Exact and pointwise code paths agree on the standard φ.
  const auto chi = g2::chi(standard);
  report.checks.push_back(tolerance_check("exact-vs-pointwise-chi", c_phi.distance(numeric_of(chi)), tol));
  Square7 identity{};
  for (std::size_t i = 0; i < 7; ++i) identity[i][i] = 1.0;
  report.checks.push_back(tolerance_check("standard-metric-identity", max_diff(g2::metric_from_3form(phi), identity), tol));
  {
    Check c;
    c.name = "exact-bilinear-form-is-6I";
    c.pass = g2::bilinear_form(standard.phi) == ExactScalar(6) * linalg::Matrix::identity(7);
    report.checks.push_back(c);
  }

  // g_{A*φ} = A^T A for A = diag(2, 1, ..., 1).
  {
    Square7 a = identity;
    a[0][0] = 2.0;
    Square7 expected = identity;
    expected[0][0] = 4.0;
    report.checks.push_back(tolerance_check("metric-pullback-diag", max_diff(g2::metric_from_3form(g2::pullback(a, phi)), expected), tol));
  }

  // Injectivity witness: distinct G2 forms have distinct 𝔠.
  {
    const double gap = g2::cayley_map(g2::pullback(*last, phi)).distance(c_phi);
    Check c;
    c.name = "cayley-injectivity-witness";
    c.pass = gap > 1e-3;
    c.tolerance = 1e-3;
    c.detail = Json{{"distance", gap}};
    report.checks.push_back(c);
  }

  // Torsion-free direction: [χ, χ] = 0 exactly.
  {
    const auto bracket = exterior::fn_bracket(chi, chi);
    Check c;
    c.name = "chi-square-zero";
    c.pass = bracket.is_zero();
    if (!c.pass) c.witness = exterior::to_string(bracket);
    report.checks.push_back(c);
  }

  // Falsification probe: φ_t = φ + t x^1 e^{127} gives [𝔠(φ_t), 𝔠(φ_t)] ≠ 0.
  {
    const auto phi_t = standard.phi + exterior::parse_form("1/2*x1 e{1,2,7}", r7);
    const std::vector<double> point{0.25, 0.1, -0.2, 0.15, 0.05, -0.1, 0.2};
    auto field = [&](std::span<const double> p) { return g2::cayley_map(g2::evaluate_form(phi_t, p)); };
    const auto square = g2::pointwise_fn_square(field, point);
    Check c;
    c.name = "perturbed-structure-probe";
    c.pass = square.max_abs() > 1e-6;
    c.tolerance = 1e-6;
    c.witness = square.to_string(6);
    c.detail = Json{{"max_abs", square.max_abs()}, {"t", 0.5}, {"point", point}};
    report.checks.push_back(c);
  }

  // Type projections: complete, idempotent, with the expected ranks.
  {
    using g2::G2Type;
    const std::vector<std::pair<G2Type, std::size_t>> ranks{
        {G2Type::two_7, 7}, {G2Type::two_14, 14}, {G2Type::three_1, 1}, {G2Type::three_7, 7}, {G2Type::three_27, 27}};
    Check c;
    c.name = "type-projections";
    c.pass = true;
    Json dims = Json::object();
    for (const auto& [type, expected] : ranks) {
      const auto& p = g2::projection_matrix(type);
      const auto r = linalg::rank(p);
      dims[g2::to_string(type)] = r;
      if (r != expected || !(p * p == p)) c.pass = false;
    }
    const bool two = g2::projection_matrix(G2Type::two_7) + g2::projection_matrix(G2Type::two_14) ==
                     linalg::Matrix::identity(21);
    const bool three = g2::projection_matrix(G2Type::three_1) + g2::projection_matrix(G2Type::three_7) +
                           g2::projection_matrix(G2Type::three_27) ==
                       linalg::Matrix::identity(35);
    c.pass = c.pass && two && three;
    c.detail = Json{{"ranks", dims}, {"complete", two && three}};
    report.checks.push_back(c);
  }

  {
    Check c;
    c.name = "star-phi-multisymplectic";
    c.pass = g2::multisymplectic_check(g2::star_phi(standard));
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace fncalc::cli
