#include "fncalc/torus/spectral.hpp"

#include <algorithm>

#include "fncalc/linalg/elimination.hpp"

namespace fncalc::torus {

using exterior::binomial;
using exterior::DomainError;
using exterior::ExactScalar;
using linalg::intersection_dim;
using linalg::kernel_basis;
using linalg::nullity;
using linalg::rank;
using linalg::same_span;

namespace {

bool is_zero_mode(const Frequency& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

Frequency negate(const Frequency& k) {
  Frequency out = k;
  for (auto& v : out) v = -v;
  return out;
}

Matrix conjugate(const Matrix& m) { return m.conj_transpose().transpose(); }

/// Columns spanning ker L_{Ψ;l+q} ∩ ker L*_{Ψ;l} on Λ^l.
Matrix harmonic_basis(const ModeOperators& ops, const Frequency& k, int l) {
  const int q = ops.shift();
  return kernel_basis(Matrix::vstack(ops.lie(k, l + q), ops.lie_star_formula(k, l)));
}

}  // namespace

std::size_t harmonic_dim(const ModeOperators& ops, const Frequency& k, int l) {
  const int q = ops.shift();
  return nullity(Matrix::vstack(ops.lie(k, l + q), ops.lie_star_formula(k, l)));
}

long cohomology_dim(const ModeOperators& ops, const Frequency& k, int l) {
  const int q = ops.shift();
  return static_cast<long>(nullity(ops.lie(k, l + q))) - static_cast<long>(rank(ops.lie(k, l)));
}

RegularityResult regularity_check(const ModeOperators& ops, const Frequency& k, int l) {
  RegularityResult r;
  const Matrix lie = ops.lie(k, l);
  const Matrix kernel = kernel_basis(ops.lie_star_formula(k, l));
  r.total = binomial(ops.dim(), l);
  r.ker_lie_star = kernel.cols();
  r.im_lie = rank(lie);
  r.intersection = intersection_dim(kernel, lie);
  r.regular = r.ker_lie_star + r.im_lie == r.total && r.intersection == 0;
  return r;
}

ModeCohomologyReport decomposition_report(const ModeOperators& ops, const Frequency& k, int l) {
  const int q = ops.shift();
  ModeCohomologyReport rep;
  rep.frequency = k;
  rep.degree = l;
  const Matrix lie_out = ops.lie(k, l + q);
  const Matrix lie_in = ops.lie(k, l);
  rep.ker_lie = nullity(lie_out);
  rep.im_lie = rank(lie_in);
  rep.cohomology = static_cast<long>(rep.ker_lie) - static_cast<long>(rep.im_lie);
  const Matrix h = kernel_basis(Matrix::vstack(lie_out, ops.lie_star_formula(k, l)));
  rep.harmonic = h.cols();
  rep.harmonic_forms = intersection_dim(h, kernel_basis(ops.laplacian(k, l)));
  rep.d_part = intersection_dim(h, ops.d(k, l - 1));
  rep.dstar_part = intersection_dim(h, ops.dstar(k, l + 1));
  rep.regular = regularity_check(ops, k, l).regular;
  return rep;
}

AnticommutationResult anticommutation_check(const ModeOperators& ops, const Frequency& k) {
  const int q = ops.shift();
  AnticommutationResult r{true, true, true};
  for (int l = 0; l <= ops.dim(); ++l) {
    const Matrix lie_l = ops.lie(k, l + q);
    if (!(ops.lie(k, l + 1 + q) * ops.d(k, l) == -(ops.d(k, l + q) * lie_l))) r.lie_d = false;
    if (!(ops.lie(k, l - 1 + q) * ops.dstar(k, l) == -(ops.dstar(k, l + q) * lie_l))) r.lie_dstar = false;
    if (!(lie_l * ops.laplacian(k, l) == ops.laplacian(k, l + q) * lie_l)) r.lie_laplacian = false;
  }
  return r;
}

std::string to_string(SymbolClass c) {
  switch (c) {
    case SymbolClass::injective: return "injective";
    case SymbolClass::surjective: return "surjective";
    case SymbolClass::bijective: return "bijective";
    case SymbolClass::neither: return "neither";
  }
  return "?";
}

SymbolClass symbol_class(const ModeOperators& ops, const Frequency& k, int l) {
  if (is_zero_mode(k)) throw DomainError("symbol_class: the symbol is only defined for k != 0");
  const Matrix m = ops.lie(k, l);
  const std::size_t r = rank(m);
  const bool injective = r == m.cols();
  const bool surjective = r == m.rows();
  if (injective && surjective) return SymbolClass::bijective;
  if (injective) return SymbolClass::injective;
  if (surjective) return SymbolClass::surjective;
  return SymbolClass::neither;
}

std::size_t tm_mode_h0(const ModeOperators& ops, const Frequency& k) { return nullity(ops.ad_vector_fields(k)); }

bool one_form_kernel_check(const ModeOperators& ops, const Frequency& k) {
  const int n = ops.dim();
  const int q = ops.shift();
  const auto& space = ops.psi().space();
  const DifferentialForm star_psi = exterior::hodge_star(ops.psi());
  const auto exponent = detail::to_exponent(k);
  const auto mode = exterior::CoefficientFunction::term(space, exponent, ExactScalar(1));
  std::vector<std::vector<ExactScalar>> columns;
  for (int j = 0; j < n; ++j) {
    const auto x = exterior::VectorField::along(j, mode);
    auto coords = exterior::mode_coordinates(exterior::lie_vector_form(x, star_psi), exponent);
    coords.resize(binomial(n, star_psi.degree()));
    columns.push_back(std::move(coords));
  }
  const Matrix lie_sharp = Matrix::from_columns(binomial(n, star_psi.degree()), columns);
  const Matrix right = kernel_basis(Matrix::vstack(lie_sharp, ops.dstar(k, 1)));
  const Matrix left = kernel_basis(ops.lie(k, 1 + q));
  return same_span(left, right);
}

bool codifferential_adjoint_check(const ModelSpace& torus, const Frequency& k, int l) {
  const Matrix dstar = mode_matrix(torus, k, l, l - 1, [](const DifferentialForm& a) { return exterior::codifferential(a); });
  const Matrix d = mode_matrix(torus, k, l - 1, l, [](const DifferentialForm& a) { return exterior::ext_deriv(a); });
  return dstar == d.conj_transpose();
}

bool lie_adjoint_check(const ModeOperators& ops, const Frequency& k, int l) {
  return ops.lie_star_formula(k, l) == ops.lie_star(k, l);
}

bool duality_map_check(const ModeOperators& ops, const Frequency& k, int l) {
  const int n = ops.dim();
  const Matrix h = harmonic_basis(ops, k, l);
  const bool star_ok = same_span(ops.star(l) * h, harmonic_basis(ops, k, n - l));
  const bool conj_ok = same_span(conjugate(h), harmonic_basis(ops, negate(k), l));
  return star_ok && conj_ok;
}

}  // namespace fncalc::torus
