#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fncalc/g2/structure.hpp"

namespace fncalc::g2 {

/// A form with real double coefficients at one point, stored densely by
/// multi-index bitmask (2^n slots, only degree-p slots used).
struct NumericForm {
  int dim = 7;
  int degree = 0;
  std::vector<double> coeffs;

  NumericForm() = default;
  NumericForm(int n, int p);
  double& at(std::uint32_t mask) { return coeffs[mask]; }
  [[nodiscard]] double at(std::uint32_t mask) const { return coeffs[mask]; }
  [[nodiscard]] double max_abs() const;
};

/// Σ_i α_i ⊗ e_i at one point.
struct NumericVectorForm {
  int dim = 7;
  int degree = 0;
  std::vector<NumericForm> components;

  NumericVectorForm() = default;
  NumericVectorForm(int n, int p);
  [[nodiscard]] double max_abs() const;
  /// Largest entry-wise difference.
  [[nodiscard]] double distance(const NumericVectorForm& other) const;
  [[nodiscard]] std::string to_string(int digits = 6) const;
};

using Square7 = std::array<std::array<double, 7>, 7>;

struct PointwiseMetric {
  std::vector<double> point;
  Square7 matrix{};
};

/// Real part of the coefficients at `point` (affine forms only).
NumericForm evaluate_form(const DifferentialForm& a, std::span<const double> point);
NumericForm to_numeric(const DifferentialForm& constant_form);

/// g_φ = det(B̃)^{-1/9} B̃ with B̃ = B/6, B(x,y) vol = ι_xφ ∧ ι_yφ ∧ φ.
/// Throws DomainError when B̃ is not positive definite (within 1e-9).
Square7 metric_from_3form(const NumericForm& phi);
PointwiseMetric metric_from_3form(const G2Structure& g2, std::span<const double> point);

/// 𝔠(φ) = ∂_{g_φ}(*_{g_φ} φ) with ∂_g Ψ = Σ_{ij} g^{ij} (ι_{e_i} Ψ) ⊗ e_j.
NumericVectorForm cayley_map(const NumericForm& phi);
NumericVectorForm cayley_map(const G2Structure& g2, std::span<const double> point);

/// Pullbacks by a linear map A (x ↦ A x): (A^*α)(v, ...) = α(Av, ...) on forms,
/// and A^*(α ⊗ X) = A^*α ⊗ A^{-1} X on vector-valued forms.
NumericForm pullback(const Square7& a, const NumericForm& form);
NumericVectorForm pullback(const Square7& a, const NumericVectorForm& k);

/// Hodge star of the metric g (orientation e^1 ∧ ... ∧ e^7).
NumericForm hodge_star(const Square7& g, const NumericForm& form);

/// Frölicher-Nijenhuis bracket [K, K] at `point` for a smooth field of
/// vector-valued forms, using central differences of step h for the first
/// derivatives (the bracket involves no higher ones).
NumericVectorForm pointwise_fn_square(const std::function<NumericVectorForm(std::span<const double>)>& field,
                                      std::span<const double> point, double h = 1e-4);

/// Numeric FN bracket from values and first partials (jets) of K and L.
NumericVectorForm jet_fn_bracket(const NumericVectorForm& k, const std::vector<NumericVectorForm>& dk,
                                 const NumericVectorForm& l, const std::vector<NumericVectorForm>& dl);

}  // namespace fncalc::g2
