#include "fncalc/exact/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fncalc::exact {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;


u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_u128(u128 v) {
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  mpz_class out = hi;
  out <<= 64;
  out += lo;
  return out;
}

mpz_class mpz_from_i128(i128 v) {
  mpz_class m = mpz_from_u128(uabs(v));
  if (v < 0) m = -m;
  return m;
}

bool fits_small(const mpz_class& z) {
  if (!z.fits_slong_p()) return false;
  long v = z.get_si();
  return v <= kSmallLimit && v >= -kSmallLimit;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value > kSmallLimit || value < -kSmallLimit) {
    *this = from_mpq(mpq_class(mpz_class(static_cast<long>(value))));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    Rational r;
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
    return r;
  }
  Rational r;
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const mpq_class>(std::move(value));
  return r;
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational{};
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (uabs(num) <= static_cast<u128>(kSmallLimit) && den <= kSmallLimit) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  return from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty input");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (part.size() <= start) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(num), d(den);
  if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
  return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
    }
    i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a) {
  if (!a.big_) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  return Rational::from_mpq(-a.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational{};
    if (a.den_ == 1 && b.den_ == 1) {
      return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, 1);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_,
                               static_cast<i128>(a.den_) * b.num_);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace fncalc::exact
