#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fncalc/exact/scalar.hpp"

namespace fncalc::linalg {

using exact::ExactScalar;

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<ExactScalar>>& columns);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const ExactScalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::vector<ExactScalar> column(std::size_t c) const;

  [[nodiscard]] Matrix conj_transpose() const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  /// Rows of `top` followed by rows of `bottom`; column counts must agree.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  /// Columns of `left` followed by columns of `right`; row counts must agree.
  static Matrix hstack(const Matrix& left, const Matrix& right);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const ExactScalar& s, const Matrix& a);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

}  // namespace fncalc::linalg
