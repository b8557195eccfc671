#include "fncalc/exterior/sampling.hpp"

#include "fncalc/exterior/index_set.hpp"

namespace fncalc::exterior {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

ExactScalar Sampler::rational() {
  int num = integer(-3, 2);
  if (num >= 0) ++num;
  return ExactScalar(exact::Rational(num, integer(1, 3)));
}

Exponent Sampler::monomial(int vars, int max_degree) {
  Exponent e{};
  const int degree = integer(0, max_degree);
  for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(integer(0, vars - 1))];
  return e;
}

CoefficientFunction Sampler::polynomial(const ModelSpace& space, int max_degree, int max_terms) {
  CoefficientFunction f(space);
  const int count = integer(1, max_terms);
  for (int t = 0; t < count; ++t) f = f + CoefficientFunction::term(space, monomial(space.dim, max_degree), rational());
  return f;
}

DifferentialForm Sampler::form(const ModelSpace& space, int degree, int max_terms, int max_poly) {
  DifferentialForm out(space, degree);
  const auto sets = basis_sets(space.dim, degree);
  if (sets.empty()) return out;
  const int count = integer(1, max_terms);
  for (int t = 0; t < count; ++t) {
    const auto& set = sets[static_cast<std::size_t>(integer(0, static_cast<int>(sets.size()) - 1))];
    out += DifferentialForm::basis(space, set, polynomial(space, max_poly, 1));
  }
  return out;
}

VectorValuedForm Sampler::vector_form(const ModelSpace& space, int degree, int max_terms, int max_poly) {
  VectorValuedForm out(space, degree);
  const int count = integer(1, max_terms);
  for (int t = 0; t < count; ++t) {
    const int direction = integer(0, space.dim - 1);
    out += VectorValuedForm::decomposable(form(space, degree, 1, max_poly), direction);
  }
  return out;
}

VectorField Sampler::vector_field(const ModelSpace& space, int max_terms, int max_poly) {
  VectorField out(space);
  const int count = integer(1, max_terms);
  for (int t = 0; t < count; ++t) out = out + VectorField::along(integer(0, space.dim - 1), polynomial(space, max_poly, 1));
  return out;
}

}  // namespace fncalc::exterior
