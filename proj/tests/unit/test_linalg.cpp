#include <random>

#include <gtest/gtest.h>

#include "fncalc/linalg/elimination.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using fncalc::exact::ExactScalar;
using fncalc::linalg::Matrix;
using testing_support::random_matrix;
using testing_support::to_eigen;

TEST(Linalg, RankMatchesSvd) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 300; ++s) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    Matrix m = random_matrix(rng, rows, cols, s % 2 == 1, 0.5);
    // Force dependencies by repeating combinations of rows.
    if (rows > 2) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * ExactScalar(2) - m(1, c);
    }
    EXPECT_EQ(fncalc::linalg::rank(m), oracle::numeric_rank(to_eigen(m))) << m.to_string();
  }
}

TEST(Linalg, KernelIsExactNullSpace) {
  std::mt19937_64 rng(12);
  for (int s = 0; s < 200; ++s) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    const Matrix m = random_matrix(rng, rows, cols, s % 3 == 0, 0.4);
    const Matrix k = fncalc::linalg::kernel_basis(m);
    EXPECT_EQ(k.rows(), cols);
    EXPECT_EQ(k.cols(), cols - fncalc::linalg::rank(m));
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(fncalc::linalg::rank(k), k.cols());
  }
}

TEST(Linalg, EmptyShapes) {
  EXPECT_EQ(fncalc::linalg::rank(Matrix(0, 4)), 0U);
  EXPECT_EQ(fncalc::linalg::nullity(Matrix(0, 4)), 4U);
  EXPECT_EQ(fncalc::linalg::kernel_basis(Matrix(0, 3)), Matrix::identity(3));
  EXPECT_EQ(fncalc::linalg::nullity(Matrix(5, 0)), 0U);
}

TEST(Linalg, IntersectionAgainstNumericOracle) {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 2 + rng() % 5;
    const Matrix a = random_matrix(rng, n, 1 + rng() % n, s % 2 == 0, 0.5);
    const Matrix b = random_matrix(rng, n, 1 + rng() % n, s % 2 == 0, 0.5);
    Eigen::MatrixXcd ab(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(a.cols() + b.cols()));
    ab << to_eigen(a), to_eigen(b);
    const std::size_t expected =
        oracle::numeric_rank(to_eigen(a)) + oracle::numeric_rank(to_eigen(b)) - oracle::numeric_rank(ab);
    EXPECT_EQ(fncalc::linalg::intersection_dim(a, b), expected);
    const Matrix basis = fncalc::linalg::intersection_basis(a, b);
    EXPECT_EQ(basis.cols(), expected);
    if (expected > 0) {
      EXPECT_EQ(fncalc::linalg::rank(Matrix::hstack(a, basis)), fncalc::linalg::rank(a));
      EXPECT_EQ(fncalc::linalg::rank(Matrix::hstack(b, basis)), fncalc::linalg::rank(b));
    }
  }
}

TEST(Linalg, SameSpan) {
  std::mt19937_64 rng(14);
  const Matrix a = random_matrix(rng, 5, 3, true, 0.2);
  const Matrix mix = random_matrix(rng, 3, 3, false, 0.0);
  if (fncalc::linalg::rank(mix) == 3) {
    EXPECT_TRUE(fncalc::linalg::same_span(a, a * mix));
  }
  EXPECT_FALSE(fncalc::linalg::same_span(Matrix::identity(3), Matrix(3, 1)));
}

TEST(Linalg, ConjugateTranspose) {
  Matrix m(1, 2);
  m(0, 1) = ExactScalar::i();
  const Matrix h = m.conj_transpose();
  EXPECT_EQ(h.rows(), 2U);
  EXPECT_EQ(h(1, 0), -ExactScalar::i());
}
