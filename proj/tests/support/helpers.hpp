#pragma once

#include <random>

#include <Eigen/Dense>

#include "fncalc/linalg/matrix.hpp"

namespace testing_support {

inline Eigen::MatrixXcd to_eigen(const fncalc::linalg::Matrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_complex();
  return out;
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

/// Random matrix with small Gaussian-integer entries; `sparsity` in [0,1) is the share of zeros.
inline fncalc::linalg::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool complex,
                                            double sparsity = 0.3) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  fncalc::linalg::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < sparsity) continue;
      const int re = entry(rng);
      const int im = complex ? entry(rng) : 0;
      m(r, c) = fncalc::exact::ExactScalar(fncalc::exact::Rational(re), fncalc::exact::Rational(im));
    }
  }
  return m;
}

}  // namespace testing_support
