#include "fncalc/g2/auxiliary.hpp"

namespace fncalc::g2 {

using exterior::CoefficientFunction;
using exterior::DomainError;
using exterior::IndexSet;

DifferentialForm kahler_form(const ModelSpace& space) {
  if (space.dim % 2 != 0) throw DomainError("kahler_form: dimension must be even, got " + space.name());
  DifferentialForm omega(space, 2);
  for (int j = 0; j < space.dim; j += 2) {
    omega += DifferentialForm::basis(space, IndexSet::single(j).with(j + 1));
  }
  return omega;
}

namespace {

/// Re-embeds a form from the first seven coordinates of R^8 (or T^8).
DifferentialForm embed7(const DifferentialForm& a, const ModelSpace& target) {
  std::vector<DifferentialForm::Term> terms;
  const int map[7] = {0, 1, 2, 3, 4, 5, 6};
  for (const auto& [index, coeff] : a.terms()) terms.emplace_back(index, coeff.remap(target, map));
  return DifferentialForm::from_terms(target, a.degree(), std::move(terms));
}

}  // namespace

DifferentialForm spin7_form(const ModelSpace& space) {
  if (space.dim != 8) throw DomainError("spin7_form: requires an 8-dimensional space, got " + space.name());
  const ModelSpace seven{7, space.flavor};
  const auto g2 = standard_phi(seven);
  const auto phi = embed7(g2.phi, space);
  const auto psi = embed7(star_phi(g2), space);
  return exterior::wedge(DifferentialForm::basis(space, IndexSet::single(7)), phi) + psi;
}

DifferentialForm complex_dc(const DifferentialForm& a) {
  const ModelSpace& space = a.space();
  if (space.dim % 2 != 0) throw DomainError("complex_dc: dimension must be even, got " + space.name());
  const ExactScalar i = ExactScalar::i();
  const ExactScalar half(Rational(1, 2));
  DifferentialForm out(space, a.degree() + 1);
  for (int j = 0; j < space.dim; j += 2) {
    const auto ex = DifferentialForm::basis(space, IndexSet::single(j));
    const auto ey = DifferentialForm::basis(space, IndexSet::single(j + 1));
    const auto dz = ex + i * ey;
    const auto dzbar = ex - i * ey;
    const auto ax = a.coordinate_derivative(j);
    const auto ay = a.coordinate_derivative(j + 1);
    // ∂_z = (∂_x - i ∂_y)/2 and ∂_z̄ = (∂_x + i ∂_y)/2 act on coefficients.
    const auto del_z = half * (ax - i * ay);
    const auto del_zbar = half * (ax + i * ay);
    out += exterior::wedge(dzbar, del_zbar) - exterior::wedge(dz, del_z);
  }
  return i * out;
}

}  // namespace fncalc::g2
