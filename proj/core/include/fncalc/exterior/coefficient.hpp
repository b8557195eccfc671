#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fncalc/exact/scalar.hpp"
#include "fncalc/exterior/model_space.hpp"

namespace fncalc::exterior {

using exact::ExactScalar;
using exact::Rational;

/// Multi-exponent m (affine: x^m) or frequency k (toroidal: exp(i<k,x>)).
/// Entries past the space dimension are always zero.
using Exponent = std::array<std::int16_t, kMaxDim>;

Exponent make_exponent(std::span<const int> values);

/// Exact function on a model space: a polynomial over Q(i) on R^n or a finite
/// Fourier sum over Q(i) on T^n. Terms are sorted by exponent, zero terms
/// are pruned.
class CoefficientFunction {
 public:
  using Term = std::pair<Exponent, ExactScalar>;

  explicit CoefficientFunction(ModelSpace space) : space_(space) {}

  static CoefficientFunction constant(ModelSpace space, const ExactScalar& value);
  /// Single monomial x^m (affine) or single mode exp(i<k,x>) (toroidal).
  static CoefficientFunction term(ModelSpace space, const Exponent& exponent, const ExactScalar& value);
  /// The coordinate function x^{index0+1}; affine spaces only.
  static CoefficientFunction coordinate(ModelSpace space, int index0);
  static CoefficientFunction fourier_mode(ModelSpace space, std::span<const int> frequency,
                                          const ExactScalar& value = ExactScalar(1));
  /// Sums duplicate exponents and prunes zeros.
  static CoefficientFunction from_terms(ModelSpace space, std::vector<Term> terms);

  [[nodiscard]] const ModelSpace& space() const noexcept { return space_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Coefficient of the zero exponent.
  [[nodiscard]] ExactScalar constant_value() const;
  /// Largest total degree (affine) or largest |k|_1 (toroidal); -1 for zero.
  [[nodiscard]] int max_degree() const;

  /// ∂/∂x^{index0+1}: formal derivative (affine) or multiplication of mode k by i·k_j (toroidal).
  [[nodiscard]] CoefficientFunction derivative(int index0) const;
  /// Pointwise complex conjugate: conjugates coefficients, and on T^n maps mode k to -k.
  [[nodiscard]] CoefficientFunction conjugate() const;

  /// Affine evaluation at a rational point.
  [[nodiscard]] ExactScalar evaluate(std::span<const Rational> point) const;
  [[nodiscard]] std::complex<double> evaluate_numeric(std::span<const double> point) const;

  /// Change of coordinates: source coordinate j becomes target coordinate
  /// map[j], or is set to zero when map[j] < 0 (affine only).
  [[nodiscard]] CoefficientFunction remap(ModelSpace target, std::span<const int> map) const;

  friend CoefficientFunction operator+(const CoefficientFunction& a, const CoefficientFunction& b);
  friend CoefficientFunction operator-(const CoefficientFunction& a, const CoefficientFunction& b);
  friend CoefficientFunction operator-(const CoefficientFunction& a);
  friend CoefficientFunction operator*(const CoefficientFunction& a, const CoefficientFunction& b);
  friend CoefficientFunction operator*(const ExactScalar& s, const CoefficientFunction& a);

  friend bool operator==(const CoefficientFunction&, const CoefficientFunction&) = default;

 private:
  ModelSpace space_;
  std::vector<Term> terms_;
};

}  // namespace fncalc::exterior
