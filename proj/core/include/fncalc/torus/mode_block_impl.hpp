#pragma once

// Template definitions for mode_block.hpp.

#include "fncalc/exterior/coordinates.hpp"

namespace fncalc::torus {

namespace detail {
exterior::Exponent to_exponent(const Frequency& k);
}

template <typename Op>
Matrix mode_matrix(const ModelSpace& space, const Frequency& k, int from_degree, int to_degree, Op&& op) {
  const auto exponent = detail::to_exponent(k);
  const auto sets = exterior::basis_sets(space.dim, from_degree);
  std::vector<std::vector<exterior::ExactScalar>> columns;
  columns.reserve(sets.size());
  const auto mode = exterior::CoefficientFunction::term(space, exponent, exterior::ExactScalar(1));
  for (auto set : sets) {
    const DifferentialForm image = op(DifferentialForm::basis(space, set, mode));
    columns.push_back(exterior::mode_coordinates(image, exponent));
    if (image.degree() != to_degree && !image.is_zero()) {
      throw exterior::StructuralError("mode_matrix: operator produced an unexpected degree");
    }
    columns.back().resize(exterior::binomial(space.dim, to_degree));
  }
  return Matrix::from_columns(exterior::binomial(space.dim, to_degree), columns);
}

}  // namespace fncalc::torus
