#include "fncalc/exterior/coordinates.hpp"

namespace fncalc::exterior {

std::size_t basis_position(int n, IndexSet set) {
  // Lexicographic rank: count the sets that agree on a prefix and then take a
  // smaller next element.
  std::size_t rank = 0;
  int previous = -1;
  int remaining = set.size();
  for (int c : set.indices()) {
    for (int j = previous + 1; j < c; ++j) rank += binomial(n - 1 - j, remaining - 1);
    previous = c;
    --remaining;
  }
  return rank;
}

std::vector<ExactScalar> mode_coordinates(const DifferentialForm& a, const Exponent& exponent) {
  const int n = a.space().dim;
  std::vector<ExactScalar> out(binomial(n, a.degree()));
  for (const auto& [index, coeff] : a.terms()) {
    for (const auto& [e, value] : coeff.terms()) {
      if (e == exponent) {
        out[basis_position(n, index)] = value;
        break;
      }
    }
  }
  return out;
}

std::vector<ExactScalar> constant_coordinates(const DifferentialForm& a) {
  if (!a.has_constant_coefficients()) throw DomainError("constant_coordinates: coefficients are not constant");
  return mode_coordinates(a, Exponent{});
}

DifferentialForm from_mode_coordinates(const ModelSpace& space, int degree, const Exponent& exponent,
                                       const std::vector<ExactScalar>& values) {
  const auto sets = basis_sets(space.dim, degree);
  if (values.size() != sets.size()) throw StructuralError("from_mode_coordinates: wrong vector length");
  std::vector<DifferentialForm::Term> terms;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (values[i].is_zero()) continue;
    terms.emplace_back(sets[i], CoefficientFunction::term(space, exponent, values[i]));
  }
  return DifferentialForm::from_terms(space, degree, std::move(terms));
}

DifferentialForm from_constant_coordinates(const ModelSpace& space, int degree,
                                           const std::vector<ExactScalar>& values) {
  return from_mode_coordinates(space, degree, Exponent{}, values);
}

linalg::Matrix as_column(const std::vector<ExactScalar>& values) {
  return linalg::Matrix::from_columns(values.size(), {values});
}

DifferentialForm apply_pointwise(const linalg::Matrix& m, const DifferentialForm& a, int target_degree) {
  const int n = a.space().dim;
  const auto targets = basis_sets(n, target_degree);
  if (m.rows() != targets.size() || m.cols() != binomial(n, a.degree())) {
    throw StructuralError("apply_pointwise: matrix shape does not match the degrees");
  }
  std::vector<DifferentialForm::Term> terms;
  for (const auto& [index, coeff] : a.terms()) {
    const std::size_t col = basis_position(n, index);
    for (std::size_t r = 0; r < targets.size(); ++r) {
      const ExactScalar& entry = m(r, col);
      if (entry.is_zero()) continue;
      terms.emplace_back(targets[r], entry * coeff);
    }
  }
  return DifferentialForm::from_terms(a.space(), target_degree, std::move(terms));
}

}  // namespace fncalc::exterior
