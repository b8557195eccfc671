#pragma once

#include "fncalc/exterior/operators.hpp"

namespace fncalc::exterior {

/// Lie bracket of vector fields, [X, Y]^j = X(Y^j) - Y(X^j).
VectorField vf_bracket(const VectorField& x, const VectorField& y);

/// Tensor Lie derivative L_X K via the Leibniz rule over α ⊗ Y:
/// L_X α ⊗ Y + α ⊗ [X, Y]. Independent of the Frölicher-Nijenhuis formula.
VectorValuedForm lie_tensor(const VectorField& x, const VectorValuedForm& k);

/// Nijenhuis-Lie derivative L_K a = ι_K da + (-1)^{deg K} d ι_K a.
DifferentialForm nijenhuis_lie(const VectorValuedForm& k, const DifferentialForm& a);

/// Frölicher-Nijenhuis bracket of two decomposables α ⊗ X1 and β ⊗ X2
/// with arbitrary vector fields:
///
///   [α⊗X1, β⊗X2] = α∧β ⊗ [X1,X2] + α∧L_{X1}β ⊗ X2 - L_{X2}α∧β ⊗ X1
///                 + (-1)^k (dα∧ι_{X1}β ⊗ X2 + ι_{X2}α∧dβ ⊗ X1),   k = deg α.
VectorValuedForm fn_bracket_decomposable(const DifferentialForm& alpha, const VectorField& x1,
                                         const DifferentialForm& beta, const VectorField& x2);

/// Frölicher-Nijenhuis bracket, the bilinear extension of the decomposable
/// formula over K = Σ_a α_a ⊗ e_a, L = Σ_b β_b ⊗ e_b with constant frame fields.
VectorValuedForm fn_bracket(const VectorValuedForm& k, const VectorValuedForm& l);

/// Outcome of a Maurer-Cartan test [∂_g Ψ, ∂_g Ψ] = 0.
struct MaurerCartanResult {
  bool is_maurer_cartan = false;
  /// The bracket itself; zero exactly when is_maurer_cartan holds.
  VectorValuedForm bracket;
};

/// Requires deg Ψ even and >= 2 (DomainError otherwise).
MaurerCartanResult mc_check(const DifferentialForm& psi);

}  // namespace fncalc::exterior
