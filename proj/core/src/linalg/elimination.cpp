#include "fncalc/linalg/elimination.hpp"

#include <stdexcept>
#include <utility>

namespace fncalc::linalg {

using exact::Rational;

namespace {

void clear_row_denominators(Matrix& m, std::size_t r) {
  bool integral = true;
  for (const auto& x : m.row(r)) {
    if (!x.is_gaussian_integer()) {
      integral = false;
      break;
    }
  }
  if (integral) return;
  mpz_class lcm = 1;
  for (const auto& x : m.row(r)) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.real().to_mpq().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.imag().to_mpq().get_den_mpz_t());
  }
  const ExactScalar scale{Rational{mpq_class{lcm}}};
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scale * m(r, c);
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

FractionFreeEchelon fraction_free_echelon(Matrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r) clear_row_denominators(m, r);

  FractionFreeEchelon out;
  ExactScalar previous(1);
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t p = pivot_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, pivot_row);
    const ExactScalar pivot = m(pivot_row, c);
    for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
      const ExactScalar lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        ExactScalar v = pivot * m(i, j);
        if (!lead.is_zero() && !m(pivot_row, j).is_zero()) v -= lead * m(pivot_row, j);
        if (!v.is_zero() && !previous.is_one()) {
          v = v / previous;
          if (!v.is_gaussian_integer()) {
            throw std::logic_error("fraction_free_echelon: inexact Bareiss division");
          }
        }
        m(i, j) = std::move(v);
      }
      m(i, c) = ExactScalar{};
    }
    previous = pivot;
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.echelon = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return fraction_free_echelon(m).pivot_columns.size();
}

ReducedEchelon rref(Matrix m) {
  ReducedEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t p = pivot_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, pivot_row);
    const ExactScalar inv = ExactScalar(1) / m(pivot_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(pivot_row, j).is_zero()) m(pivot_row, j) = inv * m(pivot_row, j);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row) continue;
      const ExactScalar factor = m(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(n);
  ReducedEchelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<ExactScalar>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<ExactScalar> v(n);
    v[f] = ExactScalar(1);
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      v[e.pivot_columns[r]] = -e.reduced(r, f);
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(n, basis);
}

Matrix column_space_basis(const Matrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix(m.rows(), 0);
  ReducedEchelon e = rref(m);
  std::vector<std::vector<ExactScalar>> cols;
  cols.reserve(e.pivot_columns.size());
  for (auto c : e.pivot_columns) cols.push_back(m.column(c));
  return Matrix::from_columns(m.rows(), cols);
}

std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return 0;
  return rank(a) + rank(b) - rank(Matrix::hstack(a, b));
}

Matrix intersection_basis(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix joined = Matrix::hstack(a, -b);
  Matrix ker = kernel_basis(joined);
  std::vector<std::vector<ExactScalar>> vectors;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    std::vector<ExactScalar> v(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ExactScalar& coeff = ker(j, k);
      if (coeff.is_zero()) continue;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (!a(r, j).is_zero()) v[r] += coeff * a(r, j);
      }
    }
    vectors.push_back(std::move(v));
  }
  return column_space_basis(Matrix::from_columns(a.rows(), vectors));
}

bool same_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(Matrix::hstack(a, b));
}

}  // namespace fncalc::linalg
