#pragma once

#include "fncalc/g2/structure.hpp"

namespace fncalc::g2 {

/// ω = Σ_j e^{2j-1, 2j} on a space of even dimension.
DifferentialForm kahler_form(const ModelSpace& space);

/// Φ = e^8 ∧ φ + *_7 φ on an 8-dimensional space, with φ the standard G2 form
/// on the first seven coordinates.
DifferentialForm spin7_form(const ModelSpace& space);

/// d^c = i(∂̄ - ∂) for the complex structure with holomorphic coordinates
/// z_j = x^{2j-1} + i x^{2j}. Written with Wirtinger derivatives and the
/// coframes dz_j, dz̄_j, independently of any bracket machinery.
DifferentialForm complex_dc(const DifferentialForm& a);

}  // namespace fncalc::g2
