#include "fncalc/exterior/bracket.hpp"

namespace fncalc::exterior {

namespace {

/// γ ⊗ X expanded in the frame: Σ_j (X^j γ) ⊗ e_j, accumulated into `out`.
void add_tensor(std::vector<DifferentialForm>& out, const DifferentialForm& gamma, const VectorField& x,
                const ExactScalar& scale) {
  if (gamma.is_zero()) return;
  for (int j = 0; j < gamma.space().dim; ++j) {
    const auto& xj = x.component(j);
    if (xj.is_zero()) continue;
    out[static_cast<std::size_t>(j)] += scale * (xj * gamma);
  }
}

}  // namespace

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  require_same_space(x.space(), y.space(), "vf_bracket");
  std::vector<CoefficientFunction> comps;
  comps.reserve(static_cast<std::size_t>(x.space().dim));
  for (int j = 0; j < x.space().dim; ++j) {
    comps.push_back(x.apply(y.component(j)) - y.apply(x.component(j)));
  }
  return VectorField(x.space(), std::move(comps));
}

VectorValuedForm lie_tensor(const VectorField& x, const VectorValuedForm& k) {
  require_same_space(x.space(), k.space(), "lie_tensor");
  const int n = k.space().dim;
  std::vector<DifferentialForm> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    DifferentialForm c = lie_vector_form(x, k.component(j));
    for (int i = 0; i < n; ++i) {
      CoefficientFunction di = x.component(j).derivative(i);
      if (di.is_zero() || k.component(i).is_zero()) continue;
      c -= di * k.component(i);
    }
    comps.push_back(std::move(c));
  }
  return VectorValuedForm(k.space(), k.degree(), std::move(comps));
}

DifferentialForm nijenhuis_lie(const VectorValuedForm& k, const DifferentialForm& a) {
  require_same_space(k.space(), a.space(), "nijenhuis_lie");
  DifferentialForm out = insert_vvform(k, ext_deriv(a));
  if (a.degree() > 0) {
    DifferentialForm second = ext_deriv(insert_vvform(k, a));
    out += (k.degree() % 2 == 0) ? second : -second;
  }
  return out;
}

VectorValuedForm fn_bracket_decomposable(const DifferentialForm& alpha, const VectorField& x1,
                                         const DifferentialForm& beta, const VectorField& x2) {
  const ModelSpace& space = alpha.space();
  require_same_space(space, beta.space(), "fn_bracket_decomposable");
  require_same_space(space, x1.space(), "fn_bracket_decomposable");
  require_same_space(space, x2.space(), "fn_bracket_decomposable");
  const int k = alpha.degree();
  const int degree = k + beta.degree();
  std::vector<DifferentialForm> out(static_cast<std::size_t>(space.dim), DifferentialForm(space, degree));
  const ExactScalar one(1);
  const ExactScalar minus_one(-1);
  const ExactScalar parity = (k % 2 == 0) ? one : minus_one;

  add_tensor(out, wedge(alpha, beta), vf_bracket(x1, x2), one);
  add_tensor(out, wedge(alpha, lie_vector_form(x1, beta)), x2, one);
  add_tensor(out, wedge(lie_vector_form(x2, alpha), beta), x1, minus_one);
  if (beta.degree() > 0) add_tensor(out, wedge(ext_deriv(alpha), insert_vector(x1, beta)), x2, parity);
  if (k > 0) add_tensor(out, wedge(insert_vector(x2, alpha), ext_deriv(beta)), x1, parity);
  return VectorValuedForm(space, degree, std::move(out));
}

VectorValuedForm fn_bracket(const VectorValuedForm& k, const VectorValuedForm& l) {
  const ModelSpace& space = k.space();
  require_same_space(space, l.space(), "fn_bracket");
  const int n = space.dim;
  const int kd = k.degree();
  const int degree = kd + l.degree();
  std::vector<DifferentialForm> out(static_cast<std::size_t>(n), DifferentialForm(space, degree));
  if (k.is_zero() || l.is_zero()) return VectorValuedForm(space, degree, std::move(out));

  // With constant frame fields [e_a, e_b] = 0 and L_{e_a} = ∂_a, so the
  // decomposable formula reduces to four wedge terms per component pair.
  std::vector<DifferentialForm> d_alpha;
  std::vector<DifferentialForm> d_beta;
  d_alpha.reserve(static_cast<std::size_t>(n));
  d_beta.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    d_alpha.push_back(ext_deriv(k.component(a)));
    d_beta.push_back(ext_deriv(l.component(a)));
  }
  const bool odd = (kd % 2) != 0;
  for (int a = 0; a < n; ++a) {
    const auto& alpha = k.component(a);
    if (alpha.is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      const auto& beta = l.component(b);
      if (beta.is_zero()) continue;
      auto& into_b = out[static_cast<std::size_t>(b)];
      auto& into_a = out[static_cast<std::size_t>(a)];

      into_b += wedge(alpha, beta.coordinate_derivative(a));
      into_a -= wedge(alpha.coordinate_derivative(b), beta);
      if (beta.degree() > 0) {
        DifferentialForm t = wedge(d_alpha[static_cast<std::size_t>(a)], insert_frame(a, beta));
        into_b += odd ? -t : t;
      }
      if (kd > 0) {
        DifferentialForm t = wedge(insert_frame(b, alpha), d_beta[static_cast<std::size_t>(b)]);
        into_a += odd ? -t : t;
      }
    }
  }
  return VectorValuedForm(space, degree, std::move(out));
}

MaurerCartanResult mc_check(const DifferentialForm& psi) {
  if (psi.degree() < 2 || psi.degree() % 2 != 0) {
    throw DomainError("mc_check: the form must have even degree >= 2, got " + std::to_string(psi.degree()));
  }
  VectorValuedForm hat = contract_metric(psi);
  VectorValuedForm bracket = fn_bracket(hat, hat);
  const bool ok = bracket.is_zero();
  return {ok, std::move(bracket)};
}

}  // namespace fncalc::exterior
