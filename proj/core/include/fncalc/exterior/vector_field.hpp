#pragma once

#include <vector>

#include "fncalc/exterior/form.hpp"

namespace fncalc::exterior {

/// X = Σ_i X^i e_i with one coefficient function per frame vector.
class VectorField {
 public:
  explicit VectorField(ModelSpace space);
  VectorField(ModelSpace space, std::vector<CoefficientFunction> components);

  /// The constant frame field e_{index0+1}.
  static VectorField frame(ModelSpace space, int index0);
  /// f · e_{index0+1}.
  static VectorField along(int index0, const CoefficientFunction& f);

  [[nodiscard]] const ModelSpace& space() const noexcept { return space_; }
  [[nodiscard]] const std::vector<CoefficientFunction>& components() const noexcept { return components_; }
  [[nodiscard]] const CoefficientFunction& component(int index0) const {
    return components_.at(static_cast<std::size_t>(index0));
  }
  [[nodiscard]] bool is_zero() const;

  /// X(f) = Σ_i X^i ∂_i f.
  [[nodiscard]] CoefficientFunction apply(const CoefficientFunction& f) const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a);
  friend VectorField operator*(const ExactScalar& s, const VectorField& a);
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  ModelSpace space_;
  std::vector<CoefficientFunction> components_;
};

/// K = Σ_i α_i ⊗ e_i ∈ Ω^k(M, TM) with n component forms of common degree k.
class VectorValuedForm {
 public:
  VectorValuedForm(ModelSpace space, int degree);
  VectorValuedForm(ModelSpace space, int degree, std::vector<DifferentialForm> components);
  /// Degree-0 vector-valued form corresponding to X.
  explicit VectorValuedForm(const VectorField& field);

  /// α ⊗ e_{index0+1}.
  static VectorValuedForm decomposable(const DifferentialForm& alpha, int index0);

  [[nodiscard]] const ModelSpace& space() const noexcept { return space_; }
  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] const std::vector<DifferentialForm>& components() const noexcept { return components_; }
  [[nodiscard]] const DifferentialForm& component(int index0) const {
    return components_.at(static_cast<std::size_t>(index0));
  }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool has_constant_coefficients() const;

  /// Only valid for degree 0.
  [[nodiscard]] VectorField to_vector_field() const;

  friend VectorValuedForm operator+(const VectorValuedForm& a, const VectorValuedForm& b);
  friend VectorValuedForm operator-(const VectorValuedForm& a, const VectorValuedForm& b);
  friend VectorValuedForm operator-(const VectorValuedForm& a);
  friend VectorValuedForm operator*(const ExactScalar& s, const VectorValuedForm& a);

  VectorValuedForm& operator+=(const VectorValuedForm& b) { return *this = *this + b; }

  friend bool operator==(const VectorValuedForm&, const VectorValuedForm&) = default;

 private:
  ModelSpace space_;
  int degree_ = 0;
  std::vector<DifferentialForm> components_;
};

}  // namespace fncalc::exterior
