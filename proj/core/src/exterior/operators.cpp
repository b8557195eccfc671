#include "fncalc/exterior/operators.hpp"

namespace fncalc::exterior {

namespace {

ExactScalar sign_scalar(int sign) { return ExactScalar(sign); }

}  // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_space(a.space(), b.space(), "wedge");
  const int degree = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero() || degree > a.space().dim) return DifferentialForm(a.space(), degree);
  std::vector<DifferentialForm::Term> terms;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      terms.emplace_back(ia.unite(ib), sign_scalar(s) * (ca * cb));
    }
  }
  return DifferentialForm::from_terms(a.space(), degree, std::move(terms));
}

DifferentialForm ext_deriv(const DifferentialForm& a) {
  const ModelSpace& space = a.space();
  const int degree = a.degree() + 1;
  std::vector<DifferentialForm::Term> terms;
  for (const auto& [index, coeff] : a.terms()) {
    for (int j = 0; j < space.dim; ++j) {
      if (index.contains(j)) continue;
      CoefficientFunction dj = coeff.derivative(j);
      if (dj.is_zero()) continue;
      const int s = wedge_sign(IndexSet::single(j), index);
      terms.emplace_back(index.with(j), sign_scalar(s) * dj);
    }
  }
  return DifferentialForm::from_terms(space, degree, std::move(terms));
}

DifferentialForm insert_frame(int index0, const DifferentialForm& a) {
  std::vector<DifferentialForm::Term> terms;
  for (const auto& [index, coeff] : a.terms()) {
    const int s = interior_sign(index0, index);
    if (s == 0) continue;
    terms.emplace_back(index.without(index0), sign_scalar(s) * coeff);
  }
  return DifferentialForm::from_terms(a.space(), a.degree() - 1, std::move(terms));
}

DifferentialForm insert_vector(const VectorField& x, const DifferentialForm& a) {
  require_same_space(x.space(), a.space(), "insert_vector");
  std::vector<DifferentialForm::Term> terms;
  for (const auto& [index, coeff] : a.terms()) {
    for (int j : index.indices()) {
      const auto& xj = x.component(j);
      if (xj.is_zero()) continue;
      terms.emplace_back(index.without(j), sign_scalar(interior_sign(j, index)) * (xj * coeff));
    }
  }
  return DifferentialForm::from_terms(a.space(), a.degree() - 1, std::move(terms));
}

DifferentialForm insert_vvform(const VectorValuedForm& k, const DifferentialForm& a) {
  require_same_space(k.space(), a.space(), "insert_vvform");
  DifferentialForm out(a.space(), k.degree() + a.degree() - 1);
  if (a.degree() == 0) return out;
  for (int i = 0; i < a.space().dim; ++i) {
    const auto& alpha = k.component(i);
    if (alpha.is_zero()) continue;
    DifferentialForm inner = insert_frame(i, a);
    if (inner.is_zero()) continue;
    out += wedge(alpha, inner);
  }
  return out;
}

DifferentialForm lie_vector_form(const VectorField& x, const DifferentialForm& a) {
  require_same_space(x.space(), a.space(), "lie_vector_form");
  DifferentialForm out = insert_vector(x, ext_deriv(a));
  if (a.degree() > 0) out += ext_deriv(insert_vector(x, a));
  return out;
}

DifferentialForm hodge_star(const DifferentialForm& a) {
  const int n = a.space().dim;
  std::vector<DifferentialForm::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& [index, coeff] : a.terms()) {
    IndexSet rest = index.complement(n);
    terms.emplace_back(rest, sign_scalar(wedge_sign(index, rest)) * coeff);
  }
  return DifferentialForm::from_terms(a.space(), n - a.degree(), std::move(terms));
}

DifferentialForm codifferential(const DifferentialForm& a) {
  const int n = a.space().dim;
  const int l = a.degree();
  if (l <= 0) return DifferentialForm(a.space(), l - 1);
  DifferentialForm out = hodge_star(ext_deriv(hodge_star(a)));
  const bool negative = ((n * (l + 1) + 1) % 2) != 0;
  return negative ? -out : out;
}

DifferentialForm laplacian(const DifferentialForm& a) {
  DifferentialForm out = codifferential(ext_deriv(a));
  if (a.degree() > 0) out += ext_deriv(codifferential(a));
  return out;
}

VectorValuedForm contract_metric(const DifferentialForm& psi) {
  if (psi.degree() < 1) throw DomainError("contract_metric: the form must have degree >= 1");
  std::vector<DifferentialForm> components;
  components.reserve(static_cast<std::size_t>(psi.space().dim));
  for (int i = 0; i < psi.space().dim; ++i) components.push_back(insert_frame(i, psi));
  return VectorValuedForm(psi.space(), psi.degree() - 1, std::move(components));
}

}  // namespace fncalc::exterior
