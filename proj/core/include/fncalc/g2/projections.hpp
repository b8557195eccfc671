#pragma once

#include <string>

#include "fncalc/g2/structure.hpp"

namespace fncalc::g2 {

/// Irreducible G2 summands of Λ² = Λ²_7 ⊕ Λ²_14 and Λ³ = Λ³_1 ⊕ Λ³_7 ⊕ Λ³_27
/// for the standard φ.
enum class G2Type { two_7, two_14, three_1, three_7, three_27 };

std::string to_string(G2Type type);
/// Accepts "2_7", "2_14", "3_1", "3_7", "3_27".
G2Type parse_g2_type(const std::string& text);

int type_degree(G2Type type);

/// Exact orthogonal projection matrix on the canonical basis of Λ^p.
///
/// Λ²: T(β) = *(φ ∧ β) has eigenvalue 2 on Λ²_7 and -1 on Λ²_14, so
/// P_7 = (T + 1)/3 and P_14 = (2 - T)/3.
/// Λ³: P_1 = φ φ^T / 7, P_7 = S S^T / 4 with S(α) = *(α ∧ φ), P_27 = 1 - P_1 - P_7.
const linalg::Matrix& projection_matrix(G2Type type);

/// Applies the projection pointwise; a must be a form on a 7-dimensional space
/// of the matching degree (DomainError otherwise).
DifferentialForm g2_type_project(const DifferentialForm& a, G2Type type);

}  // namespace fncalc::g2
