#pragma once

#include <utility>
#include <vector>

#include "fncalc/exterior/coefficient.hpp"
#include "fncalc/exterior/index_set.hpp"

namespace fncalc::exterior {

/// Degree-p form Σ_I f_I e^I with strictly increasing multi-indices I.
///
/// The degree is stored explicitly and may lie outside [0, n]; such forms are
/// necessarily zero (e.g. ι_X of a 0-form has degree -1). Terms are kept in
/// lexicographic multi-index order with zero coefficients pruned.
class DifferentialForm {
 public:
  using Term = std::pair<IndexSet, CoefficientFunction>;

  DifferentialForm(ModelSpace space, int degree) : space_(space), degree_(degree) {}

  static DifferentialForm basis(ModelSpace space, IndexSet index, const CoefficientFunction& coefficient);
  static DifferentialForm basis(ModelSpace space, IndexSet index, const ExactScalar& coefficient = ExactScalar(1));
  /// The 0-form f.
  static DifferentialForm function(const CoefficientFunction& f);
  /// Sums duplicate multi-indices and prunes zeros.
  static DifferentialForm from_terms(ModelSpace space, int degree, std::vector<Term> terms);

  [[nodiscard]] const ModelSpace& space() const noexcept { return space_; }
  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool has_constant_coefficients() const;
  [[nodiscard]] CoefficientFunction coefficient(IndexSet index) const;

  /// Complex conjugate form (coefficients conjugated, frame untouched).
  [[nodiscard]] DifferentialForm conjugate() const;
  /// Coordinate derivative ∂_j applied to every coefficient (= L_{e_j} on flat space).
  [[nodiscard]] DifferentialForm coordinate_derivative(int index0) const;

  friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm operator-(const DifferentialForm& a);
  friend DifferentialForm operator*(const ExactScalar& s, const DifferentialForm& a);
  friend DifferentialForm operator*(const CoefficientFunction& f, const DifferentialForm& a);

  DifferentialForm& operator+=(const DifferentialForm& b) { return *this = *this + b; }
  DifferentialForm& operator-=(const DifferentialForm& b) { return *this = *this - b; }

  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

 private:
  ModelSpace space_;
  int degree_ = 0;
  std::vector<Term> terms_;
};

}  // namespace fncalc::exterior
