#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fncalc::exterior {

/// Largest supported ambient dimension. Multi-indices are bitmasks and
/// monomial exponents are fixed-width arrays of this length.
inline constexpr int kMaxDim = 16;

/// Operands live on different model spaces, or a shape invariant is broken.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand is outside the operation's domain (wrong degree, non-positive form, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Flavor {
  affine,    ///< R^n with polynomial coefficients
  toroidal,  ///< T^n = R^n / 2πZ^n with finite Fourier coefficients
};

/// Flat R^n or T^n with the identity metric in the standard frame and the
/// standard orientation e^1 ∧ ... ∧ e^n.
struct ModelSpace {
  int dim = 1;
  Flavor flavor = Flavor::affine;

  static ModelSpace affine(int n);
  static ModelSpace toroidal(int n);

  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;

  [[nodiscard]] std::string name() const;
};

/// Throws StructuralError unless both spaces are equal.
void require_same_space(const ModelSpace& a, const ModelSpace& b, const char* where);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
std::size_t binomial(int n, int k);

}  // namespace fncalc::exterior
