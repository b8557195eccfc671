#include "fncalc/exterior/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fncalc::exterior {

namespace {

std::int16_t checked_add(std::int16_t a, std::int16_t b) {
  int s = int{a} + int{b};
  if (s > std::numeric_limits<std::int16_t>::max() || s < std::numeric_limits<std::int16_t>::min()) {
    throw DomainError("CoefficientFunction: exponent overflow");
  }
  return static_cast<std::int16_t>(s);
}

bool exponent_is_zero(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](std::int16_t v) { return v == 0; });
}

}  // namespace

Exponent make_exponent(std::span<const int> values) {
  if (values.size() > static_cast<std::size_t>(kMaxDim)) {
    throw StructuralError("make_exponent: too many entries");
  }
  Exponent e{};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > std::numeric_limits<std::int16_t>::max() ||
        values[i] < std::numeric_limits<std::int16_t>::min()) {
      throw DomainError("make_exponent: entry out of range");
    }
    e[i] = static_cast<std::int16_t>(values[i]);
  }
  return e;
}

CoefficientFunction CoefficientFunction::constant(ModelSpace space, const ExactScalar& value) {
  return term(space, Exponent{}, value);
}

CoefficientFunction CoefficientFunction::term(ModelSpace space, const Exponent& exponent,
                                              const ExactScalar& value) {
  for (int j = space.dim; j < kMaxDim; ++j) {
    if (exponent[static_cast<std::size_t>(j)] != 0) {
      throw StructuralError("CoefficientFunction: exponent entry beyond the space dimension");
    }
  }
  if (space.flavor == Flavor::affine) {
    for (int j = 0; j < space.dim; ++j) {
      if (exponent[static_cast<std::size_t>(j)] < 0) {
        throw DomainError("CoefficientFunction: negative monomial exponent");
      }
    }
  }
  CoefficientFunction f(space);
  if (!value.is_zero()) f.terms_.emplace_back(exponent, value);
  return f;
}

CoefficientFunction CoefficientFunction::coordinate(ModelSpace space, int index0) {
  if (space.flavor != Flavor::affine) {
    throw DomainError("CoefficientFunction::coordinate: coordinate functions exist only on R^n");
  }
  if (index0 < 0 || index0 >= space.dim) throw StructuralError("coordinate index out of range");
  Exponent e{};
  e[static_cast<std::size_t>(index0)] = 1;
  return term(space, e, ExactScalar(1));
}

CoefficientFunction CoefficientFunction::fourier_mode(ModelSpace space, std::span<const int> frequency,
                                                      const ExactScalar& value) {
  if (space.flavor != Flavor::toroidal) {
    throw DomainError("CoefficientFunction::fourier_mode: Fourier modes exist only on T^n");
  }
  if (frequency.size() != static_cast<std::size_t>(space.dim)) {
    throw StructuralError("fourier_mode: frequency length must equal the dimension");
  }
  return term(space, make_exponent(frequency), value);
}

CoefficientFunction CoefficientFunction::from_terms(ModelSpace space, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  CoefficientFunction f(space);
  f.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().first == t.first) {
      f.terms_.back().second += t.second;
      if (f.terms_.back().second.is_zero()) f.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

bool CoefficientFunction::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exponent_is_zero(terms_.front().first));
}

ExactScalar CoefficientFunction::constant_value() const {
  for (const auto& [e, c] : terms_) {
    if (exponent_is_zero(e)) return c;
  }
  return ExactScalar{};
}

int CoefficientFunction::max_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int j = 0; j < space_.dim; ++j) d += std::abs(int{e[static_cast<std::size_t>(j)]});
    best = std::max(best, d);
  }
  return best;
}

CoefficientFunction CoefficientFunction::derivative(int index0) const {
  if (index0 < 0 || index0 >= space_.dim) throw StructuralError("derivative: index out of range");
  const auto j = static_cast<std::size_t>(index0);
  CoefficientFunction out(space_);
  if (space_.flavor == Flavor::affine) {
    std::vector<Term> terms;
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Exponent reduced = e;
      reduced[j] = static_cast<std::int16_t>(e[j] - 1);
      terms.emplace_back(reduced, ExactScalar(Rational(e[j])) * c);
    }
    // Every surviving term loses the same unit vector, so the order is preserved.
    out.terms_ = std::move(terms);
    return out;
  }
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    out.terms_.emplace_back(e, ExactScalar(Rational(0), Rational(e[j])) * c);
  }
  return out;
}

CoefficientFunction CoefficientFunction::conjugate() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exponent k = e;
    if (space_.flavor == Flavor::toroidal) {
      for (auto& v : k) v = static_cast<std::int16_t>(-v);
    }
    terms.emplace_back(k, c.conj());
  }
  return from_terms(space_, std::move(terms));
}

ExactScalar CoefficientFunction::evaluate(std::span<const Rational> point) const {
  if (space_.flavor != Flavor::affine) {
    throw DomainError("CoefficientFunction::evaluate: exact evaluation requires an affine space");
  }
  if (point.size() != static_cast<std::size_t>(space_.dim)) throw StructuralError("evaluate: point size");
  ExactScalar total;
  for (const auto& [e, c] : terms_) {
    Rational value(1);
    for (int j = 0; j < space_.dim; ++j) {
      for (int p = 0; p < e[static_cast<std::size_t>(j)]; ++p) value *= point[static_cast<std::size_t>(j)];
    }
    total += c * ExactScalar(value);
  }
  return total;
}

std::complex<double> CoefficientFunction::evaluate_numeric(std::span<const double> point) const {
  if (point.size() != static_cast<std::size_t>(space_.dim)) throw StructuralError("evaluate: point size");
  std::complex<double> total = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> value;
    if (space_.flavor == Flavor::affine) {
      double v = 1.0;
      for (int j = 0; j < space_.dim; ++j) v *= std::pow(point[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
      value = v;
    } else {
      double phase = 0.0;
      for (int j = 0; j < space_.dim; ++j) phase += e[static_cast<std::size_t>(j)] * point[static_cast<std::size_t>(j)];
      value = std::polar(1.0, phase);
    }
    total += c.to_complex() * value;
  }
  return total;
}

CoefficientFunction CoefficientFunction::remap(ModelSpace target, std::span<const int> map) const {
  if (map.size() != static_cast<std::size_t>(space_.dim)) throw StructuralError("remap: map size");
  if (target.flavor != space_.flavor) throw StructuralError("remap: flavor change");
  std::vector<Term> terms;
  for (const auto& [e, c] : terms_) {
    Exponent out{};
    bool dropped = false;
    for (int j = 0; j < space_.dim; ++j) {
      const auto v = e[static_cast<std::size_t>(j)];
      if (v == 0) continue;
      const int to = map[static_cast<std::size_t>(j)];
      if (to < 0) {
        if (space_.flavor != Flavor::affine) throw DomainError("remap: cannot zero a toroidal coordinate");
        dropped = true;
        break;
      }
      if (to >= target.dim) throw StructuralError("remap: target index out of range");
      out[static_cast<std::size_t>(to)] = checked_add(out[static_cast<std::size_t>(to)], v);
    }
    if (!dropped) terms.emplace_back(out, c);
  }
  return from_terms(target, std::move(terms));
}

CoefficientFunction operator+(const CoefficientFunction& a, const CoefficientFunction& b) {
  require_same_space(a.space_, b.space_, "CoefficientFunction +");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  CoefficientFunction out(a.space_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      out.terms_.push_back(*ib++);
    } else {
      ExactScalar s = ia->second + ib->second;
      if (!s.is_zero()) out.terms_.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  return out;
}

CoefficientFunction operator-(const CoefficientFunction& a) {
  CoefficientFunction out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

CoefficientFunction operator-(const CoefficientFunction& a, const CoefficientFunction& b) { return a + (-b); }

CoefficientFunction operator*(const CoefficientFunction& a, const CoefficientFunction& b) {
  require_same_space(a.space_, b.space_, "CoefficientFunction *");
  if (a.is_zero() || b.is_zero()) return CoefficientFunction(a.space_);
  if (b.is_constant()) return b.constant_value() * a;
  if (a.is_constant()) return a.constant_value() * b;
  std::vector<CoefficientFunction::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{};
      for (int j = 0; j < a.space_.dim; ++j) {
        e[static_cast<std::size_t>(j)] = checked_add(ea[static_cast<std::size_t>(j)], eb[static_cast<std::size_t>(j)]);
      }
      terms.emplace_back(e, ca * cb);
    }
  }
  return CoefficientFunction::from_terms(a.space_, std::move(terms));
}

CoefficientFunction operator*(const ExactScalar& s, const CoefficientFunction& a) {
  if (s.is_zero()) return CoefficientFunction(a.space_);
  if (s.is_one()) return a;
  CoefficientFunction out = a;
  for (auto& t : out.terms_) t.second = s * t.second;
  return out;
}

}  // namespace fncalc::exterior
