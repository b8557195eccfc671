#pragma once

#include "fncalc/exterior/vector_field.hpp"

namespace fncalc::exterior {

/// a ∧ b. The result has degree deg a + deg b even when that exceeds n (then it is zero).
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

DifferentialForm ext_deriv(const DifferentialForm& a);

/// ι_X a; a 0-form maps to the zero form of degree -1.
DifferentialForm insert_vector(const VectorField& x, const DifferentialForm& a);

/// ι_{e_{index0+1}} a.
DifferentialForm insert_frame(int index0, const DifferentialForm& a);

/// ι_K a = Σ_i α_i ∧ ι_{e_i} a for K = Σ_i α_i ⊗ e_i; degree deg K + deg a - 1.
DifferentialForm insert_vvform(const VectorValuedForm& k, const DifferentialForm& a);

/// Cartan formula L_X a = ι_X da + d ι_X a.
DifferentialForm lie_vector_form(const VectorField& x, const DifferentialForm& a);

/// Hodge star of the flat metric with the standard orientation, so that
/// a ∧ *b = <a, b> e^{1...n}. Coefficients pass through unchanged.
DifferentialForm hodge_star(const DifferentialForm& a);

/// d* = (-1)^{n(l+1)+1} * d * on l-forms; zero (degree -1) on 0-forms.
DifferentialForm codifferential(const DifferentialForm& a);

/// Hodge Laplacian d d* + d* d.
DifferentialForm laplacian(const DifferentialForm& a);

/// ∂_g Ψ = Σ_i (ι_{e_i} Ψ) ⊗ e_i in the orthonormal frame. Throws DomainError on 0-forms.
VectorValuedForm contract_metric(const DifferentialForm& psi);

}  // namespace fncalc::exterior
