#pragma once

#include "fncalc/exterior/bracket.hpp"
#include "fncalc/linalg/matrix.hpp"

namespace fncalc::g2 {

using exterior::DifferentialForm;
using exterior::ModelSpace;
using exterior::VectorValuedForm;
using exact::ExactScalar;
using exact::Rational;

/// A 3-form on a 7-dimensional model space. Coefficients may vary; pointwise
/// routines evaluate them numerically.
struct G2Structure {
  DifferentialForm phi;
};

/// φ = e^{123} + e^{145} + e^{167} + e^{246} - e^{257} - e^{347} - e^{356}.
/// Throws DomainError unless space.dim == 7.
G2Structure standard_phi(const ModelSpace& space);

/// *φ computed with the flat Hodge star (never entered by hand).
DifferentialForm star_phi(const G2Structure& g2);

/// χ = ∂_g(*φ) for a structure whose induced metric is the flat one, checked
/// exactly via B(e_i, e_j) = 6 δ_ij. Throws DomainError otherwise; use
/// cayley_map for general φ.
VectorValuedForm chi(const G2Structure& g2);

/// Exact bilinear form B with B(x, y) vol = ι_xφ ∧ ι_yφ ∧ φ for a constant φ.
linalg::Matrix bilinear_form(const DifferentialForm& phi);

/// True iff v ↦ ι_v Ψ is injective (rank n). Requires constant coefficients.
bool multisymplectic_check(const DifferentialForm& psi);

/// Rank of v ↦ ι_v Ψ.
std::size_t insertion_rank(const DifferentialForm& psi);

}  // namespace fncalc::g2
