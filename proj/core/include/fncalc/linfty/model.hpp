#pragma once

#include <array>
#include <string>
#include <vector>

#include "fncalc/g2/structure.hpp"

namespace fncalc::linfty {

using exterior::DifferentialForm;
using exterior::ModelSpace;
using exterior::VectorValuedForm;

/// A coordinate 3-plane L = span(e_i, e_j, e_k) in R^7 with the standard φ,
/// its normal space NL spanned by the remaining four basis vectors, and the
/// identity as exponential map. Plane and normal indices are kept ascending,
/// so L carries the orientation of e_i ∧ e_j ∧ e_k with i < j < k.
class FlatAssociativeModel {
 public:
  /// `plane` holds three distinct 1-based labels in any order.
  explicit FlatAssociativeModel(const std::vector<int>& plane);

  [[nodiscard]] const ModelSpace& ambient() const noexcept { return ambient_; }
  [[nodiscard]] const ModelSpace& plane_space() const noexcept { return plane_space_; }
  /// 0-based ambient indices of the plane and normal directions.
  [[nodiscard]] const std::array<int, 3>& plane() const noexcept { return plane_; }
  [[nodiscard]] const std::array<int, 4>& normal() const noexcept { return normal_; }
  /// χ = ∂_g *φ of the standard structure (Exp^* χ = χ in the flat model).
  [[nodiscard]] const VectorValuedForm& chi() const noexcept { return chi_; }
  [[nodiscard]] std::string plane_label() const;

 private:
  ModelSpace ambient_;
  ModelSpace plane_space_;
  std::array<int, 3> plane_{};
  std::array<int, 4> normal_{};
  VectorValuedForm chi_;
};

/// ω ∈ Ω^p(L, NL): one form on L (coordinates t1, t2, t3) per normal direction.
class NormalValuedForm {
 public:
  NormalValuedForm(const FlatAssociativeModel& model, int degree);
  NormalValuedForm(const FlatAssociativeModel& model, int degree, std::vector<DifferentialForm> components);

  /// α ⊗ n_a with a the position in the ascending normal frame.
  static NormalValuedForm decomposable(const FlatAssociativeModel& model, const DifferentialForm& alpha,
                                       int normal_position);

  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] const std::vector<DifferentialForm>& components() const noexcept { return components_; }
  [[nodiscard]] const DifferentialForm& component(int a) const { return components_.at(static_cast<std::size_t>(a)); }
  [[nodiscard]] bool is_zero() const;

  friend NormalValuedForm operator+(const NormalValuedForm& a, const NormalValuedForm& b);
  friend NormalValuedForm operator-(const NormalValuedForm& a, const NormalValuedForm& b);
  friend NormalValuedForm operator-(const NormalValuedForm& a);
  friend NormalValuedForm operator*(const exact::ExactScalar& s, const NormalValuedForm& a);
  friend bool operator==(const NormalValuedForm& a, const NormalValuedForm& b);

 private:
  ModelSpace plane_space_;
  int degree_;
  std::vector<DifferentialForm> components_;
};

/// I(φ ⊗ X) = π^*φ ⊗ X̂: coefficients and coframe pulled back along the
/// projection to L, the normal field lifted to a vertical field.
VectorValuedForm vertical_lift(const FlatAssociativeModel& model, const NormalValuedForm& omega);

/// P = Pr^N ∘ r: restrict to L (normal coordinates set to zero, coframe
/// factors with normal indices dropped) and keep the normal vector components.
NormalValuedForm project_P(const FlatAssociativeModel& model, const VectorValuedForm& k);

/// Exp^* for the flat model (the identity map).
VectorValuedForm exp_pullback(const VectorValuedForm& k);

struct AssociativityResult {
  bool associative = false;
  NormalValuedForm witness;  ///< P(χ)
};

AssociativityResult is_associative(const FlatAssociativeModel& model);

/// Text of I(ω) in ambient coordinates, e.g. "(-1 e{1,2,4})⊗e7".
std::string to_string(const FlatAssociativeModel& model, const NormalValuedForm& omega);

}  // namespace fncalc::linfty
