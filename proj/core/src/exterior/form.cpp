#include "fncalc/exterior/form.hpp"

#include <algorithm>

namespace fncalc::exterior {

DifferentialForm DifferentialForm::basis(ModelSpace space, IndexSet index,
                                         const CoefficientFunction& coefficient) {
  require_same_space(space, coefficient.space(), "DifferentialForm::basis");
  if (index.bits() >> space.dim) throw StructuralError("DifferentialForm::basis: index beyond dimension");
  DifferentialForm f(space, index.size());
  if (!coefficient.is_zero()) f.terms_.emplace_back(index, coefficient);
  return f;
}

DifferentialForm DifferentialForm::basis(ModelSpace space, IndexSet index, const ExactScalar& coefficient) {
  return basis(space, index, CoefficientFunction::constant(space, coefficient));
}

DifferentialForm DifferentialForm::function(const CoefficientFunction& f) {
  return basis(f.space(), IndexSet{}, f);
}

DifferentialForm DifferentialForm::from_terms(ModelSpace space, int degree, std::vector<Term> terms) {
  for (const auto& [index, coeff] : terms) {
    if (index.size() != degree) throw StructuralError("DifferentialForm: term degree mismatch");
    if (index.bits() >> space.dim) throw StructuralError("DifferentialForm: index beyond dimension");
    require_same_space(space, coeff.space(), "DifferentialForm::from_terms");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return LexLess{}(a.first, b.first); });
  DifferentialForm f(space, degree);
  f.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().first == t.first) {
      f.terms_.back().second = f.terms_.back().second + t.second;
      if (f.terms_.back().second.is_zero()) f.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

bool DifferentialForm::has_constant_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_constant(); });
}

CoefficientFunction DifferentialForm::coefficient(IndexSet index) const {
  for (const auto& [i, c] : terms_) {
    if (i == index) return c;
  }
  return CoefficientFunction(space_);
}

DifferentialForm DifferentialForm::conjugate() const {
  DifferentialForm out(space_, degree_);
  out.terms_.reserve(terms_.size());
  for (const auto& [i, c] : terms_) out.terms_.emplace_back(i, c.conjugate());
  return out;
}

DifferentialForm DifferentialForm::coordinate_derivative(int index0) const {
  std::vector<Term> terms;
  for (const auto& [i, c] : terms_) terms.emplace_back(i, c.derivative(index0));
  return from_terms(space_, degree_, std::move(terms));
}

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_space(a.space_, b.space_, "DifferentialForm +");
  if (a.degree_ != b.degree_) {
    if (a.is_zero() && b.is_zero()) return a;
    throw StructuralError("DifferentialForm +: degree mismatch (" + std::to_string(a.degree_) + " vs " +
                          std::to_string(b.degree_) + ")");
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  DifferentialForm out(a.space_, a.degree_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  LexLess less;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && less(ia->first, ib->first))) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || less(ib->first, ia->first)) {
      out.terms_.push_back(*ib++);
    } else {
      CoefficientFunction s = ia->second + ib->second;
      if (!s.is_zero()) out.terms_.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  return out;
}

DifferentialForm operator-(const DifferentialForm& a) {
  DifferentialForm out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) { return a + (-b); }

DifferentialForm operator*(const ExactScalar& s, const DifferentialForm& a) {
  if (s.is_zero()) return DifferentialForm(a.space_, a.degree_);
  DifferentialForm out = a;
  for (auto& t : out.terms_) t.second = s * t.second;
  return out;
}

DifferentialForm operator*(const CoefficientFunction& f, const DifferentialForm& a) {
  require_same_space(f.space(), a.space_, "function * form");
  std::vector<DifferentialForm::Term> terms;
  terms.reserve(a.terms_.size());
  for (const auto& [i, c] : a.terms_) terms.emplace_back(i, f * c);
  return DifferentialForm::from_terms(a.space_, a.degree_, std::move(terms));
}

}  // namespace fncalc::exterior
