#include "fncalc/linalg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fncalc::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<ExactScalar>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<ExactScalar> Matrix::column(std::size_t c) const {
  std::vector<ExactScalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::conj_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  }
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("Matrix::vstack: column mismatch");
  Matrix m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.cols_ == 0) return right;
  if (right.cols_ == 0) return left;
  if (left.rows_ != right.rows_) throw std::invalid_argument("Matrix::hstack: row mismatch");
  Matrix m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, left.cols_ + c) = right(r, c);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ExactScalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        m(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const ExactScalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x = s * x;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace fncalc::linalg
