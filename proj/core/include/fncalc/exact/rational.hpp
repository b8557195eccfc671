#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fncalc::exact {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits are stored inline;
/// anything larger is promoted to a shared immutable GMP rational and demoted
/// again as soon as a result fits. The representation is canonical, so
/// equality is a field comparison.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "n" or "n/d" with an optional leading sign.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_mpq(mpq_class value);
  static Rational from_wide(i128 num, i128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fncalc::exact
