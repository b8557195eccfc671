#include "fncalc/exterior/vector_field.hpp"

#include <algorithm>

namespace fncalc::exterior {

VectorField::VectorField(ModelSpace space)
    : space_(space), components_(static_cast<std::size_t>(space.dim), CoefficientFunction(space)) {}

VectorField::VectorField(ModelSpace space, std::vector<CoefficientFunction> components)
    : space_(space), components_(std::move(components)) {
  if (components_.size() != static_cast<std::size_t>(space.dim)) {
    throw StructuralError("VectorField: component count must equal the dimension");
  }
  for (const auto& c : components_) require_same_space(space_, c.space(), "VectorField");
}

VectorField VectorField::frame(ModelSpace space, int index0) {
  return along(index0, CoefficientFunction::constant(space, ExactScalar(1)));
}

VectorField VectorField::along(int index0, const CoefficientFunction& f) {
  VectorField x(f.space());
  if (index0 < 0 || index0 >= f.space().dim) throw StructuralError("VectorField: frame index out of range");
  x.components_[static_cast<std::size_t>(index0)] = f;
  return x;
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.is_zero(); });
}

CoefficientFunction VectorField::apply(const CoefficientFunction& f) const {
  require_same_space(space_, f.space(), "VectorField::apply");
  CoefficientFunction out(space_);
  for (int i = 0; i < space_.dim; ++i) {
    const auto& xi = components_[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    out = out + xi * f.derivative(i);
  }
  return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_space(a.space_, b.space_, "VectorField +");
  VectorField out = a;
  for (std::size_t i = 0; i < out.components_.size(); ++i) out.components_[i] = out.components_[i] + b.components_[i];
  return out;
}

VectorField operator-(const VectorField& a) {
  VectorField out = a;
  for (auto& c : out.components_) c = -c;
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const ExactScalar& s, const VectorField& a) {
  VectorField out = a;
  for (auto& c : out.components_) c = s * c;
  return out;
}

VectorValuedForm::VectorValuedForm(ModelSpace space, int degree)
    : space_(space), degree_(degree),
      components_(static_cast<std::size_t>(space.dim), DifferentialForm(space, degree)) {}

VectorValuedForm::VectorValuedForm(ModelSpace space, int degree, std::vector<DifferentialForm> components)
    : space_(space), degree_(degree), components_(std::move(components)) {
  if (components_.size() != static_cast<std::size_t>(space.dim)) {
    throw StructuralError("VectorValuedForm: component count must equal the dimension");
  }
  for (auto& c : components_) {
    require_same_space(space_, c.space(), "VectorValuedForm");
    if (c.degree() != degree_) {
      if (!c.is_zero()) throw StructuralError("VectorValuedForm: components must share the degree");
      c = DifferentialForm(space_, degree_);
    }
  }
}

VectorValuedForm::VectorValuedForm(const VectorField& field) : VectorValuedForm(field.space(), 0) {
  for (int i = 0; i < space_.dim; ++i) {
    components_[static_cast<std::size_t>(i)] = DifferentialForm::function(field.component(i));
  }
}

VectorValuedForm VectorValuedForm::decomposable(const DifferentialForm& alpha, int index0) {
  VectorValuedForm k(alpha.space(), alpha.degree());
  if (index0 < 0 || index0 >= alpha.space().dim) throw StructuralError("decomposable: frame index out of range");
  k.components_[static_cast<std::size_t>(index0)] = alpha;
  return k;
}

bool VectorValuedForm::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.is_zero(); });
}

bool VectorValuedForm::has_constant_coefficients() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const auto& c) { return c.has_constant_coefficients(); });
}

VectorField VectorValuedForm::to_vector_field() const {
  if (degree_ != 0) throw DomainError("VectorValuedForm::to_vector_field: degree must be 0");
  std::vector<CoefficientFunction> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(c.coefficient(IndexSet{}));
  return VectorField(space_, std::move(comps));
}

VectorValuedForm operator+(const VectorValuedForm& a, const VectorValuedForm& b) {
  require_same_space(a.space_, b.space_, "VectorValuedForm +");
  if (a.degree_ != b.degree_) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    throw StructuralError("VectorValuedForm +: degree mismatch");
  }
  VectorValuedForm out = a;
  for (std::size_t i = 0; i < out.components_.size(); ++i) out.components_[i] += b.components_[i];
  return out;
}

VectorValuedForm operator-(const VectorValuedForm& a) {
  VectorValuedForm out = a;
  for (auto& c : out.components_) c = -c;
  return out;
}

VectorValuedForm operator-(const VectorValuedForm& a, const VectorValuedForm& b) { return a + (-b); }

VectorValuedForm operator*(const ExactScalar& s, const VectorValuedForm& a) {
  VectorValuedForm out = a;
  for (auto& c : out.components_) c = s * c;
  return out;
}

}  // namespace fncalc::exterior
