#pragma once

#include <vector>

#include "fncalc/exterior/form.hpp"
#include "fncalc/linalg/matrix.hpp"

namespace fncalc::exterior {

/// Position of `set` within basis_sets(n, set.size()).
std::size_t basis_position(int n, IndexSet set);

/// Coefficients of the single mode (or monomial) `exponent` of `a`, listed in
/// the canonical basis order of basis_sets(n, deg a).
std::vector<ExactScalar> mode_coordinates(const DifferentialForm& a, const Exponent& exponent);

/// Coordinates of a constant-coefficient form; throws DomainError otherwise.
std::vector<ExactScalar> constant_coordinates(const DifferentialForm& a);

/// Inverse of mode_coordinates: Σ_I v_I · (mode `exponent`) e^I.
DifferentialForm from_mode_coordinates(const ModelSpace& space, int degree, const Exponent& exponent,
                                       const std::vector<ExactScalar>& values);

DifferentialForm from_constant_coordinates(const ModelSpace& space, int degree,
                                           const std::vector<ExactScalar>& values);

/// Column vector view of coordinates.
linalg::Matrix as_column(const std::vector<ExactScalar>& values);

/// Applies a C^∞-linear operator on p-forms given by its constant matrix in
/// the canonical basis (rows: basis of degree `target_degree`).
DifferentialForm apply_pointwise(const linalg::Matrix& m, const DifferentialForm& a, int target_degree);

}  // namespace fncalc::exterior
