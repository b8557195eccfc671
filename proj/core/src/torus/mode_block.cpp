#include "fncalc/torus/mode_block.hpp"

#include <functional>

namespace fncalc::torus {

using exterior::binomial;
using exterior::DomainError;
using exterior::ExactScalar;
using exterior::Flavor;

namespace detail {

exterior::Exponent to_exponent(const Frequency& k) {
  if (k.size() > static_cast<std::size_t>(exterior::kMaxDim)) {
    throw exterior::StructuralError("frequency has too many entries");
  }
  exterior::Exponent e{};
  for (std::size_t j = 0; j < k.size(); ++j) e[j] = static_cast<std::int16_t>(k[j]);
  return e;
}

}  // namespace detail

namespace {

void require_parallel(const DifferentialForm& psi) {
  if (psi.space().flavor != Flavor::toroidal) throw DomainError("mode blocks need a form on a torus");
  if (!psi.has_constant_coefficients()) throw DomainError("mode blocks need a constant-coefficient Ψ");
  if (psi.degree() < 2 || psi.degree() % 2 != 0) throw DomainError("mode blocks need Ψ of even degree >= 2");
}

void require_frequency(const ModelSpace& space, const Frequency& k) {
  if (k.size() != static_cast<std::size_t>(space.dim)) {
    throw exterior::StructuralError("frequency length must equal the torus dimension");
  }
}

Frequency unit(int n, int j) {
  Frequency k(static_cast<std::size_t>(n), 0);
  k[static_cast<std::size_t>(j)] = 1;
  return k;
}

/// (-1)^{n(n-l)+1}
ExactScalar adjoint_sign(int n, int l) { return ((n * (n - l) + 1) % 2 != 0) ? ExactScalar(-1) : ExactScalar(1); }

Matrix empty_shape(int n, int rows_degree, int cols_degree) {
  return Matrix(binomial(n, rows_degree), binomial(n, cols_degree));
}

}  // namespace

ModeBlock assemble_mode(const Frequency& k, int l, const DifferentialForm& psi) {
  require_parallel(psi);
  const ModelSpace& space = psi.space();
  require_frequency(space, k);
  const int n = space.dim;
  const VectorValuedForm hat = exterior::contract_metric(psi);
  const int q = hat.degree();

  ModeBlock block;
  block.frequency = k;
  block.degree = l;
  block.d = mode_matrix(space, k, l, l + 1, [](const DifferentialForm& a) { return exterior::ext_deriv(a); });
  block.dstar = mode_matrix(space, k, l, l - 1, [](const DifferentialForm& a) { return exterior::codifferential(a); });
  block.laplacian = mode_matrix(space, k, l, l, [](const DifferentialForm& a) { return exterior::laplacian(a); });
  block.lie = mode_matrix(space, k, l - q, l,
                          [&](const DifferentialForm& a) { return exterior::nijenhuis_lie(hat, a); });
  const ExactScalar sign = adjoint_sign(n, l);
  block.lie_star = mode_matrix(space, k, l, l - q, [&](const DifferentialForm& a) {
    return sign * exterior::hodge_star(exterior::nijenhuis_lie(hat, exterior::hodge_star(a)));
  });
  return block;
}

Matrix assemble_ad_vector_fields(const Frequency& k, const DifferentialForm& psi) {
  require_parallel(psi);
  const ModelSpace& space = psi.space();
  require_frequency(space, k);
  const int n = space.dim;
  const VectorValuedForm hat = exterior::contract_metric(psi);
  const std::size_t block = binomial(n, hat.degree());
  const auto exponent = detail::to_exponent(k);
  const auto mode = exterior::CoefficientFunction::term(space, exponent, ExactScalar(1));
  std::vector<std::vector<ExactScalar>> columns;
  for (int j = 0; j < n; ++j) {
    const auto x = VectorValuedForm::decomposable(DifferentialForm::function(mode), j);
    const VectorValuedForm image = exterior::fn_bracket(hat, x);
    std::vector<ExactScalar> column;
    column.reserve(block * static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      auto coords = exterior::mode_coordinates(image.component(c), exponent);
      coords.resize(block);
      column.insert(column.end(), coords.begin(), coords.end());
    }
    columns.push_back(std::move(column));
  }
  return Matrix::from_columns(block * static_cast<std::size_t>(n), columns);
}

ModeOperators::ModeOperators(const DifferentialForm& psi) : psi_(psi), n_(psi.space().dim), q_(psi.degree() - 1) {
  require_parallel(psi);
  const auto hat = exterior::contract_metric(psi);
  d_units_.resize(static_cast<std::size_t>(n_) + 1);
  lie_units_.resize(static_cast<std::size_t>(n_) + 1);
  for (int j = 0; j < n_; ++j) {
    const Frequency e = unit(n_, j);
    for (int l = 0; l <= n_; ++l) {
      d_units_[static_cast<std::size_t>(l)].push_back(
          mode_matrix(psi.space(), e, l, l + 1, [](const DifferentialForm& a) { return exterior::ext_deriv(a); }));
      lie_units_[static_cast<std::size_t>(l)].push_back(mode_matrix(
          psi.space(), e, l - q_, l, [&](const DifferentialForm& a) { return exterior::nijenhuis_lie(hat, a); }));
    }
    ad_units_.push_back(assemble_ad_vector_fields(e, psi));
  }
  for (int l = 0; l <= n_; ++l) {
    star_.push_back(mode_matrix(psi.space(), Frequency(static_cast<std::size_t>(n_), 0), l, n_ - l,
                                          [](const DifferentialForm& a) { return exterior::hodge_star(a); }));
  }
}

Matrix ModeOperators::combine(const std::vector<Matrix>& units, const Frequency& k) const {
  if (k.size() != static_cast<std::size_t>(n_)) {
    throw exterior::StructuralError("frequency length must equal the torus dimension");
  }
  Matrix out(units.front().rows(), units.front().cols());
  for (int j = 0; j < n_; ++j) {
    const int kj = k[static_cast<std::size_t>(j)];
    if (kj == 0) continue;
    const Matrix& u = units[static_cast<std::size_t>(j)];
    const ExactScalar s(kj);
    for (std::size_t r = 0; r < u.rows(); ++r) {
      for (std::size_t c = 0; c < u.cols(); ++c) {
        if (!u(r, c).is_zero()) out(r, c) += s * u(r, c);
      }
    }
  }
  return out;
}

Matrix ModeOperators::d(const Frequency& k, int l) const {
  if (l < 0 || l > n_) return empty_shape(n_, l + 1, l);
  return combine(d_units_[static_cast<std::size_t>(l)], k);
}

Matrix ModeOperators::dstar(const Frequency& k, int l) const {
  if (l < 1 || l > n_) return empty_shape(n_, l - 1, l);
  return d(k, l - 1).conj_transpose();
}

Matrix ModeOperators::laplacian(const Frequency& k, int l) const {
  if (l < 0 || l > n_) return empty_shape(n_, l, l);
  Matrix out(binomial(n_, l), binomial(n_, l));
  if (l < n_) out = out + dstar(k, l + 1) * d(k, l);
  if (l > 0) out = out + d(k, l - 1) * dstar(k, l);
  return out;
}

Matrix ModeOperators::lie(const Frequency& k, int l) const {
  if (l < 0 || l > n_) return empty_shape(n_, l, l - q_);
  return combine(lie_units_[static_cast<std::size_t>(l)], k);
}

Matrix ModeOperators::lie_star(const Frequency& k, int l) const { return lie(k, l).conj_transpose(); }

Matrix ModeOperators::lie_star_formula(const Frequency& k, int l) const {
  if (l < 0 || l > n_) return empty_shape(n_, l - q_, l);
  const int middle = n_ - l + q_;
  if (middle > n_) return empty_shape(n_, l - q_, l);
  return adjoint_sign(n_, l) * (star(middle) * (lie(k, middle) * star(l)));
}

Matrix ModeOperators::ad_vector_fields(const Frequency& k) const { return combine(ad_units_, k); }

const Matrix& ModeOperators::star(int l) const { return star_.at(static_cast<std::size_t>(l)); }

long norm_squared(const Frequency& k) {
  long s = 0;
  for (int v : k) s += static_cast<long>(v) * v;
  return s;
}

std::vector<Frequency> enumerate_modes(int n, int bound) {
  std::vector<Frequency> out;
  Frequency k(static_cast<std::size_t>(n), -bound);
  for (;;) {
    out.push_back(k);
    int j = n - 1;
    while (j >= 0 && k[static_cast<std::size_t>(j)] == bound) {
      k[static_cast<std::size_t>(j)] = -bound;
      --j;
    }
    if (j < 0) break;
    ++k[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace fncalc::torus
