#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fncalc/exact/rational.hpp"

namespace fncalc::exact {

/// Gaussian rational re + im*i. Both parts are canonical rationals, so the
/// pair is canonical too.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(std::int64_t re) : re_(re) {}          // NOLINT(google-explicit-constructor)
  ExactScalar(int re) : re_(re) {}                   // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return {Rational{0}, Rational{1}}; }

  /// Accepts "3/2", "-i", "2/3i", "(1-2i)".
  static ExactScalar parse(std::string_view text);

  [[nodiscard]] const Rational& real() const noexcept { return re_; }
  [[nodiscard]] const Rational& imag() const noexcept { return im_; }

  [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }
  /// True when both parts are integers (a Gaussian integer).
  [[nodiscard]] bool is_gaussian_integer() const { return re_.is_integer() && im_.is_integer(); }

  [[nodiscard]] ExactScalar conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

  [[nodiscard]] std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  [[nodiscard]] std::string to_string() const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.re_, -a.im_}; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);

  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
  ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& z);

}  // namespace fncalc::exact
