#include "common.hpp"
#include "fncalc/exterior/bracket.hpp"
#include "fncalc/exterior/operators.hpp"
#include "fncalc/exterior/sampling.hpp"
#include "fncalc/exterior/text.hpp"
#include "fncalc/g2/auxiliary.hpp"
#include "fncalc/g2/structure.hpp"

namespace fncalc::cli {

using exact::ExactScalar;
using exact::Rational;
using exterior::CoefficientFunction;
using exterior::Sampler;
using exterior::VectorValuedForm;
using exterior::fn_bracket;
using exterior::nijenhuis_lie;

namespace {

std::string pair_text(const VectorValuedForm& a, const VectorValuedForm& b) {
  return "K=" + exterior::to_string(a) + "; L=" + exterior::to_string(b);
}

}  // namespace

SuiteReport gla_axioms(const SuiteConfig& config) {
  const int samples = config.samples.value_or(100);
  SuiteReport report;
  report.config = Json{{"seed", config.seed}, {"samples", samples}, {"form_degree_max", 3}, {"poly_degree_max", 2}};
  for (int n : {4, 7}) {
    Sampler rng(config.seed + static_cast<std::uint64_t>(n));
    const auto space = ModelSpace::affine(n);
    Tally skew{"skew-symmetry[" + space.name() + "]"};
    Tally jacobi{"jacobi[" + space.name() + "]"};
    for (int s = 0; s < samples; ++s) {
      const int a = rng.integer(0, 3);
      const int b = rng.integer(0, 3);
      const int c = rng.integer(0, 3);
      const auto k = rng.vector_form(space, a);
      const auto l = rng.vector_form(space, b);
      const auto m = rng.vector_form(space, c);
      const auto kl = fn_bracket(k, l);
      skew.note(!kl.is_zero());
      const auto skew_rest = kl + ExactScalar(sign_of(a * b)) * fn_bracket(l, k);
      skew.record(skew_rest.is_zero(), [&] { return exterior::to_string(skew_rest); });
      const auto outer = fn_bracket(k, fn_bracket(l, m));
      jacobi.note(!outer.is_zero());
      const auto jac_rest =
          outer - fn_bracket(kl, m) - ExactScalar(sign_of(a * b)) * fn_bracket(l, fn_bracket(k, m));
      jacobi.record(jac_rest.is_zero(), [&] { return exterior::to_string(jac_rest); });
    }
    report.checks.push_back(skew.to_check());
    report.checks.push_back(jacobi.to_check());
  }
  return report;
}

SuiteReport fn_action(const SuiteConfig& config) {
  const int samples = config.samples.value_or(100);
  SuiteReport report;
  report.config = Json{{"seed", config.seed}, {"samples", samples}};
  for (int n : {4, 7}) {
    Sampler rng(config.seed + 100 + static_cast<std::uint64_t>(n));
    const auto space = ModelSpace::affine(n);
    Tally hom{"action-homomorphism[" + space.name() + "]"};
    Tally lie{"lie-derivative-agreement[" + space.name() + "]"};
    Tally ins{"insertion-derivation[" + space.name() + "]"};
    Tally der{"lie-derivation[" + space.name() + "]"};
    for (int s = 0; s < samples; ++s) {
      // L_{[K1,K2]} a = L_K1 L_K2 a - (-1)^{k1 k2} L_K2 L_K1 a
      const int d1 = rng.integer(0, 2);
      const int d2 = rng.integer(0, 2);
      const auto k1 = rng.vector_form(space, d1);
      const auto k2 = rng.vector_form(space, d2);
      const auto a = rng.form(space, rng.integer(0, 2));
      const auto lhs = nijenhuis_lie(fn_bracket(k1, k2), a);
      hom.note(!lhs.is_zero());
      const auto rest = lhs - nijenhuis_lie(k1, nijenhuis_lie(k2, a)) +
                        ExactScalar(sign_of(d1 * d2)) * nijenhuis_lie(k2, nijenhuis_lie(k1, a));
      hom.record(rest.is_zero(), [&] { return pair_text(k1, k2) + "; a=" + exterior::to_string(a); });

      // [X, K] equals the tensor Lie derivative of K along X.
      const auto x = rng.vector_field(space);
      const auto k = rng.vector_form(space, rng.integer(0, 3));
      const auto xk = fn_bracket(VectorValuedForm(x), k);
      lie.note(!xk.is_zero());
      const bool same = xk == exterior::lie_tensor(x, k);
      lie.record(same, [&] { return pair_text(VectorValuedForm(x), k); });

      // ι_K and L_K are derivations of degrees k-1 and k.
      const int dk = rng.integer(0, 2);
      const int p = rng.integer(0, 2);
      const auto kk = rng.vector_form(space, dk);
      const auto alpha = rng.form(space, p);
      const auto beta = rng.form(space, rng.integer(0, 2));
      const auto ab = exterior::wedge(alpha, beta);
      ins.note(!exterior::insert_vvform(kk, ab).is_zero());
      der.note(!nijenhuis_lie(kk, ab).is_zero());
      const auto ins_rest = exterior::insert_vvform(kk, ab) -
                            exterior::wedge(exterior::insert_vvform(kk, alpha), beta) -
                            ExactScalar(sign_of((dk - 1) * p)) * exterior::wedge(alpha, exterior::insert_vvform(kk, beta));
      ins.record(ins_rest.is_zero(), [&] { return exterior::to_string(ins_rest); });
      const auto der_rest = nijenhuis_lie(kk, ab) - exterior::wedge(nijenhuis_lie(kk, alpha), beta) -
                            ExactScalar(sign_of(dk * p)) * exterior::wedge(alpha, nijenhuis_lie(kk, beta));
      der.record(der_rest.is_zero(), [&] { return exterior::to_string(der_rest); });
    }
    for (const auto* t : {&hom, &lie, &ins, &der}) report.checks.push_back(t->to_check());
  }
  return report;
}

SuiteReport mc_suite(const SuiteConfig& config) {
  SuiteReport report;
  auto add = [&](const std::string& name, const DifferentialForm& psi, bool expect_mc) {
    const auto result = exterior::mc_check(psi);
    Check c;
    c.name = name;
    c.pass = result.is_maurer_cartan == expect_mc;
    if (!result.is_maurer_cartan) c.witness = exterior::to_string(result.bracket);
    report.checks.push_back(c);
    return result;
  };

  if (!config.psi.empty()) {
    const auto psi = resolve_psi(config.psi, config.dim, false, 4);
    report.config = Json{{"psi", psi.label}, {"space", psi.form.space().name()}};
    const auto result = add("maurer-cartan[" + psi.label + "]", psi.form, true);
    report.data["psi"] = exterior::to_string(psi.form);
    report.data["witness"] = result.is_maurer_cartan ? Json(nullptr) : Json(exterior::to_string(result.bracket));
    return report;
  }

  report.config = Json{{"psi", "default-list"}};
  const auto r2 = ModelSpace::affine(2);
  const auto r4 = ModelSpace::affine(4);
  const auto r6 = ModelSpace::affine(6);
  const auto omega6 = g2::kahler_form(r6);
  add("maurer-cartan[e{1,2} on R^2]", DifferentialForm::basis(r2, exterior::IndexSet::from_labels({1, 2})), true);
  add("maurer-cartan[kahler on R^4]", g2::kahler_form(r4), true);
  add("maurer-cartan[kahler on R^6]", omega6, true);
  add("maurer-cartan[kahler^2/2 on R^6]", ExactScalar(Rational(1, 2)) * exterior::wedge(omega6, omega6), true);
  add("maurer-cartan[star-phi on R^7]", g2::star_phi(g2::standard_phi(ModelSpace::affine(7))), true);
  add("maurer-cartan[spin7 on R^8]", g2::spin7_form(ModelSpace::affine(8)), true);
  add("non-parallel-probe[x1 e{1,2} on R^2]", exterior::parse_form("x1 e{1,2}", r2), false);
  return report;
}

SuiteReport kahler_dc(const SuiteConfig& config) {
  const int samples = config.samples.value_or(50);
  const int n = config.dim.value_or(4);
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("kahler-dc needs an even dimension");
  const auto space = ModelSpace::affine(n);
  const auto hat = exterior::contract_metric(g2::kahler_form(space));
  SuiteReport report;
  report.config = Json{{"seed", config.seed}, {"samples", samples}, {"space", space.name()}};

  // Pin the global sign on a = x^1.
  const auto x1 = DifferentialForm::function(CoefficientFunction::coordinate(space, 0));
  const auto lie_x1 = nijenhuis_lie(hat, x1);
  const auto dc_x1 = g2::complex_dc(x1);
  int sign = 0;
  if (lie_x1 == dc_x1) sign = 1;
  if (lie_x1 == -dc_x1) sign = -1;
  Check pin;
  pin.name = "sign-pinned-by-x1";
  pin.pass = sign != 0;
  if (sign == 0) pin.witness = exterior::to_string(lie_x1) + " vs " + exterior::to_string(dc_x1);
  report.checks.push_back(pin);
  report.data["sign"] = sign;

  Sampler rng(config.seed + 300);
  Tally agree{"lie-equals-dc"};
  for (int s = 0; s < samples; ++s) {
    const auto a = rng.form(space, rng.integer(0, n));
    const auto lie_a = nijenhuis_lie(hat, a);
    agree.note(!lie_a.is_zero());
    const auto rest = lie_a - ExactScalar(sign) * g2::complex_dc(a);
    agree.record(sign != 0 && rest.is_zero(), [&] { return "a=" + exterior::to_string(a); });
  }
  report.checks.push_back(agree.to_check());
  return report;
}

}  // namespace fncalc::cli
