#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond reading its values: polynomials are dense maps
// over GMP rationals, forms are maps from bitmasks, and the FN bracket is
// obtained from the action on coordinate functions rather than from the
// decomposable formula the library uses.

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "fncalc/exterior/vector_field.hpp"

namespace oracle {

struct CQ {
  mpq_class re = 0, im = 0;
  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
};
CQ operator+(const CQ& a, const CQ& b);
CQ operator-(const CQ& a, const CQ& b);
CQ operator*(const CQ& a, const CQ& b);
bool operator==(const CQ& a, const CQ& b);

using Mono = std::vector<int>;

struct Poly {
  int n = 0;
  std::map<Mono, CQ> terms;
  [[nodiscard]] bool is_zero() const { return terms.empty(); }
};
Poly constant(int n, const CQ& c);
Poly coordinate(int n, int j);
Poly operator+(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const CQ& c, const Poly& a);
Poly partial(const Poly& a, int j);

struct Form {
  int n = 0;
  int deg = 0;
  std::map<unsigned, Poly> c;
  [[nodiscard]] bool is_zero() const { return c.empty(); }
};
Form zero_form(int n, int deg);
Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form scale(const CQ& s, const Form& a);
Form wedge(const Form& a, const Form& b);
Form d(const Form& a);
/// ι_{∂_j} α.
Form insert_frame(int j, const Form& a);
Form hodge(const Form& a);
bool operator==(const Form& a, const Form& b);

struct VForm {
  int n = 0;
  int deg = 0;
  std::vector<Form> comp;
  [[nodiscard]] bool is_zero() const;
};
VForm zero_vform(int n, int deg);
VForm operator+(const VForm& a, const VForm& b);
bool operator==(const VForm& a, const VForm& b);
/// ι_K α = Σ_j K^j ∧ ι_{∂_j} α.
Form insert(const VForm& k, const Form& a);
/// L_K = ι_K d - (-1)^{k-1} d ι_K.
Form lie(const VForm& k, const Form& a);
/// [K, L]^j = L_K L^j - (-1)^{kl} L_L K^j, read off from the action on x^j.
VForm fn(const VForm& k, const VForm& l);
/// Σ_i ι_{∂_i} ψ ⊗ ∂_i.
VForm contract(const Form& psi);

// Conversions from library values (affine spaces only).
Poly of(const fncalc::exterior::CoefficientFunction& f);
Form of(const fncalc::exterior::DifferentialForm& a);
VForm of(const fncalc::exterior::VectorValuedForm& k);

/// Masks with popcount p in {0..n-1}, ordered lexicographically by index sequence.
std::vector<unsigned> basis(int n, int p);
/// Coefficient of e^{mask} in a constant form (0 if absent).
CQ constant_coeff(const Form& a, unsigned mask);

/// Per-mode matrices for a constant Ψ on T^n, in floating point.
class ModeOracle {
 public:
  ModeOracle(const Form& psi);
  using CMatrix = Eigen::MatrixXcd;
  /// L_{Ψ} : Λ^{l-q} -> Λ^l at frequency k.
  [[nodiscard]] CMatrix lie(const std::vector<int>& k, int l) const;
  [[nodiscard]] CMatrix d(const std::vector<int>& k, int l) const;
  [[nodiscard]] std::size_t harmonic_dim(const std::vector<int>& k, int l) const;
  [[nodiscard]] long cohomology_dim(const std::vector<int>& k, int l) const;
  [[nodiscard]] int q() const { return q_; }

 private:
  int n_;
  int q_;
  VForm hat_;
};

/// Numerical rank by singular values above tol * max(1, σ_max).
std::size_t numeric_rank(const Eigen::MatrixXcd& m, double tol = 1e-9);

}  // namespace oracle
