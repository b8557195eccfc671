#include "fncalc/exact/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fncalc::exact {

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return ExactScalar(a.re_ * b.re_);
  if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  if (a.re_.is_zero() && b.re_.is_zero()) return ExactScalar(-(a.im_ * b.im_));
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
  Rational n = b.norm();
  ExactScalar num = a * b.conj();
  return {num.re_ / n, num.im_ / n};
}

std::string ExactScalar::to_string() const {
  auto imag_part = [](const Rational& v) {
    if (v.is_one()) return std::string("i");
    if (v == Rational(-1)) return std::string("-i");
    return v.to_string() + "i";
  };
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return imag_part(im_);
  std::string out = "(" + re_.to_string();
  if (im_.sign() > 0) {
    out += "+" + imag_part(im_);
  } else {
    out += imag_part(im_);
  }
  return out + ")";
}

ExactScalar ExactScalar::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("ExactScalar::parse: empty input");
  auto parse_imag = [](std::string_view s) -> Rational {
    // s ends with 'i'
    s.remove_suffix(1);
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return Rational::parse(s);
  };
  if (text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("ExactScalar::parse: unbalanced parenthesis");
    std::string_view inner = trim(text.substr(1, text.size() - 2));
    if (inner.empty() || inner.back() != 'i') {
      throw std::invalid_argument("ExactScalar::parse: complex literal must end in 'i'");
    }
    // split at the last sign that is not the leading one
    std::size_t split = std::string_view::npos;
    for (std::size_t k = inner.size(); k-- > 1;) {
      if (inner[k] == '+' || inner[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string_view::npos) {
      throw std::invalid_argument("ExactScalar::parse: malformed complex literal");
    }
    return {Rational::parse(inner.substr(0, split)), parse_imag(inner.substr(split))};
  }
  if (text.back() == 'i') return {Rational(0), parse_imag(text)};
  return ExactScalar(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& z) { return os << z.to_string(); }

}  // namespace fncalc::exact
