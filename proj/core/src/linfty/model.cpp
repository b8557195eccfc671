#include "fncalc/linfty/model.hpp"

#include <algorithm>

#include "fncalc/exterior/text.hpp"

namespace fncalc::linfty {

using exterior::CoefficientFunction;
using exterior::DomainError;
using exterior::IndexSet;
using exterior::StructuralError;

namespace {

IndexSet map_set(IndexSet set, const int* targets) {
  IndexSet out;
  for (int i : set.indices()) out = out.with(targets[i]);
  return out;
}

}  // namespace

FlatAssociativeModel::FlatAssociativeModel(const std::vector<int>& plane)
    : ambient_(ModelSpace::affine(7)), plane_space_(ModelSpace::affine(3)), chi_(ambient_, 3) {
  if (plane.size() != 3) throw StructuralError("a plane needs exactly three basis labels");
  std::vector<int> sorted = plane;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < 3; ++i) {
    if (sorted[i] < 1 || sorted[i] > 7) throw StructuralError("plane labels must lie in 1..7");
    if (i > 0 && sorted[i] == sorted[i - 1]) throw StructuralError("plane labels must be distinct");
    plane_[i] = sorted[i] - 1;
  }
  std::size_t a = 0;
  for (int j = 0; j < 7; ++j) {
    if (std::find(plane_.begin(), plane_.end(), j) == plane_.end()) normal_[a++] = j;
  }
  chi_ = g2::chi(g2::standard_phi(ambient_));
}

std::string FlatAssociativeModel::plane_label() const {
  return std::to_string(plane_[0] + 1) + "," + std::to_string(plane_[1] + 1) + "," + std::to_string(plane_[2] + 1);
}

NormalValuedForm::NormalValuedForm(const FlatAssociativeModel& model, int degree)
    : plane_space_(model.plane_space()), degree_(degree), components_(4, DifferentialForm(model.plane_space(), degree)) {}

NormalValuedForm::NormalValuedForm(const FlatAssociativeModel& model, int degree, std::vector<DifferentialForm> components)
    : plane_space_(model.plane_space()), degree_(degree), components_(std::move(components)) {
  if (components_.size() != 4) throw StructuralError("NormalValuedForm: needs four components");
  for (auto& c : components_) {
    exterior::require_same_space(c.space(), plane_space_, "NormalValuedForm");
    if (c.degree() != degree_) {
      if (!c.is_zero()) throw StructuralError("NormalValuedForm: components must share the degree");
      c = DifferentialForm(plane_space_, degree_);
    }
  }
}

NormalValuedForm NormalValuedForm::decomposable(const FlatAssociativeModel& model, const DifferentialForm& alpha,
                                                int normal_position) {
  if (normal_position < 0 || normal_position >= 4) throw StructuralError("normal position out of range");
  NormalValuedForm out(model, alpha.degree());
  out.components_[static_cast<std::size_t>(normal_position)] = alpha;
  return out;
}

bool NormalValuedForm::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.is_zero(); });
}

NormalValuedForm operator+(const NormalValuedForm& a, const NormalValuedForm& b) {
  if (a.degree_ != b.degree_) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    throw StructuralError("NormalValuedForm +: degree mismatch");
  }
  NormalValuedForm out = a;
  for (std::size_t i = 0; i < 4; ++i) out.components_[i] += b.components_[i];
  return out;
}

NormalValuedForm operator-(const NormalValuedForm& a) {
  NormalValuedForm out = a;
  for (auto& c : out.components_) c = -c;
  return out;
}

NormalValuedForm operator-(const NormalValuedForm& a, const NormalValuedForm& b) { return a + (-b); }

NormalValuedForm operator*(const exact::ExactScalar& s, const NormalValuedForm& a) {
  NormalValuedForm out = a;
  for (auto& c : out.components_) c = s * c;
  return out;
}

bool operator==(const NormalValuedForm& a, const NormalValuedForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.components_ == b.components_;
}

VectorValuedForm vertical_lift(const FlatAssociativeModel& model, const NormalValuedForm& omega) {
  const auto& ambient = model.ambient();
  const int* plane = model.plane().data();
  std::vector<DifferentialForm> comps(7, DifferentialForm(ambient, omega.degree()));
  for (int a = 0; a < 4; ++a) {
    std::vector<DifferentialForm::Term> terms;
    for (const auto& [index, coeff] : omega.component(a).terms()) {
      terms.emplace_back(map_set(index, plane), coeff.remap(ambient, model.plane()));
    }
    comps[static_cast<std::size_t>(model.normal()[static_cast<std::size_t>(a)])] =
        DifferentialForm::from_terms(ambient, omega.degree(), std::move(terms));
  }
  return VectorValuedForm(ambient, omega.degree(), std::move(comps));
}

NormalValuedForm project_P(const FlatAssociativeModel& model, const VectorValuedForm& k) {
  std::array<int, 7> restrict_map{};
  restrict_map.fill(-1);
  std::uint32_t plane_bits = 0;
  for (int i = 0; i < 3; ++i) {
    restrict_map[static_cast<std::size_t>(model.plane()[static_cast<std::size_t>(i)])] = i;
    plane_bits |= 1U << model.plane()[static_cast<std::size_t>(i)];
  }
  std::vector<DifferentialForm> comps;
  for (int a = 0; a < 4; ++a) {
    const auto& source = k.component(model.normal()[static_cast<std::size_t>(a)]);
    std::vector<DifferentialForm::Term> terms;
    for (const auto& [index, coeff] : source.terms()) {
      if ((index.bits() & ~plane_bits) != 0U) continue;
      IndexSet target;
      for (int j : index.indices()) target = target.with(restrict_map[static_cast<std::size_t>(j)]);
      terms.emplace_back(target, coeff.remap(model.plane_space(), restrict_map));
    }
    comps.push_back(DifferentialForm::from_terms(model.plane_space(), k.degree(), std::move(terms)));
  }
  return NormalValuedForm(model, k.degree(), std::move(comps));
}

VectorValuedForm exp_pullback(const VectorValuedForm& k) { return k; }

AssociativityResult is_associative(const FlatAssociativeModel& model) {
  NormalValuedForm witness = project_P(model, exp_pullback(model.chi()));
  const bool ok = witness.is_zero();
  return {ok, std::move(witness)};
}

std::string to_string(const FlatAssociativeModel& model, const NormalValuedForm& omega) {
  return exterior::to_string(vertical_lift(model, omega));
}

}  // namespace fncalc::linfty
