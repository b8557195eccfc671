#pragma once

#include <array>
#include <vector>

#include "fncalc/exterior/bracket.hpp"
#include "fncalc/linalg/matrix.hpp"

namespace fncalc::torus {

using exterior::DifferentialForm;
using exterior::ModelSpace;
using exterior::VectorValuedForm;
using linalg::Matrix;

/// Frequency k ∈ Z^n of the mode exp(i<k,x>).
using Frequency = std::vector<int>;

/// Matrices of the operators at one Fourier mode, on the canonical bases of
/// Λ^p with the common factor exp(i<k,x>) dropped. q = deg Ψ - 1.
struct ModeBlock {
  Frequency frequency;
  int degree = 0;
  Matrix d;          ///< Λ^l → Λ^{l+1}
  Matrix dstar;      ///< Λ^l → Λ^{l-1}
  Matrix laplacian;  ///< Λ^l → Λ^l
  Matrix lie;        ///< L_{Ψ;l}: Λ^{l-q} → Λ^l
  Matrix lie_star;   ///< L*_{Ψ;l}: Λ^l → Λ^{l-q}, from the formula sign · * L_Ψ *
};

/// Builds every block by applying the symbolic operators of the exterior
/// module to the basis forms exp(i<k,x>) e^I on T^n. Ψ must be a constant
/// form of even degree >= 2 on a toroidal space (DomainError otherwise).
ModeBlock assemble_mode(const Frequency& k, int l, const DifferentialForm& psi);

/// Matrix at mode k of a degree-shifting map on forms: column I is the mode-k
/// coordinate vector of op(exp(i<k,x>) e^I).
template <typename Op>
Matrix mode_matrix(const ModelSpace& space, const Frequency& k, int from_degree, int to_degree, Op&& op);

/// Matrix of ad_Ψ̂ = [Ψ̂, ·] on vector fields exp(i<k,x>) v, v ∈ C^n:
/// (n · C(n, q)) × n, rows ordered by component then basis.
Matrix assemble_ad_vector_fields(const Frequency& k, const DifferentialForm& psi);

/// Fast per-mode operators for a fixed parallel Ψ. Every block is homogeneous
/// linear in k, so it is the combination Σ_j k_j B(e_j) of blocks assembled
/// symbolically once at the unit frequencies.
class ModeOperators {
 public:
  explicit ModeOperators(const DifferentialForm& psi);

  [[nodiscard]] int dim() const noexcept { return n_; }
  [[nodiscard]] int shift() const noexcept { return q_; }
  [[nodiscard]] const DifferentialForm& psi() const noexcept { return psi_; }

  /// Degree conventions as in ModeBlock; out-of-range degrees give empty shapes.
  [[nodiscard]] Matrix d(const Frequency& k, int l) const;
  [[nodiscard]] Matrix dstar(const Frequency& k, int l) const;  ///< conjugate transpose of d(k, l-1)
  [[nodiscard]] Matrix laplacian(const Frequency& k, int l) const;
  [[nodiscard]] Matrix lie(const Frequency& k, int l) const;
  [[nodiscard]] Matrix lie_star(const Frequency& k, int l) const;  ///< conjugate transpose of lie(k, l)
  /// L*_{Ψ;l} via the Hodge-star formula (-1)^{n(n-l)+1} * L_Ψ *.
  [[nodiscard]] Matrix lie_star_formula(const Frequency& k, int l) const;
  [[nodiscard]] Matrix ad_vector_fields(const Frequency& k) const;
  /// Constant matrix of * : Λ^l → Λ^{n-l}.
  [[nodiscard]] const Matrix& star(int l) const;

 private:
  Matrix combine(const std::vector<Matrix>& units, const Frequency& k) const;

  DifferentialForm psi_;
  int n_;
  int q_;
  std::vector<std::vector<Matrix>> d_units_;    // [l][j]
  std::vector<std::vector<Matrix>> lie_units_;  // [l][j]
  std::vector<Matrix> ad_units_;                // [j]
  std::vector<Matrix> star_;                    // [l]
};

/// Squared norm |k|^2.
long norm_squared(const Frequency& k);

/// All k with |k|_∞ <= bound in lexicographic order (the zero mode included).
std::vector<Frequency> enumerate_modes(int n, int bound);

}  // namespace fncalc::torus

#include "fncalc/torus/mode_block_impl.hpp"
