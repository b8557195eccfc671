#pragma once

#include <cstddef>
#include <vector>

#include "fncalc/linalg/matrix.hpp"

namespace fncalc::linalg {

/// Fraction-free (Bareiss) echelon form over the Gaussian integers.
///
/// Rows are first scaled to clear denominators; every division performed
/// afterwards is exact. `pivot_columns` lists the columns that received a
/// pivot, in order.
struct FractionFreeEchelon {
  Matrix echelon;
  std::vector<std::size_t> pivot_columns;
};

FractionFreeEchelon fraction_free_echelon(Matrix m);

/// Rank over Q(i), computed by fraction-free elimination.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form by Gauss-Jordan elimination over Q(i).
struct ReducedEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

ReducedEchelon rref(Matrix m);

/// Basis of the null space, one column per basis vector (cols() x nullity).
Matrix kernel_basis(const Matrix& m);

/// Basis of the column space taken from the pivot columns of `m`.
Matrix column_space_basis(const Matrix& m);

std::size_t nullity(const Matrix& m);

/// dim(span A ∩ span B) for column-spanning sets A, B with equal row counts.
std::size_t intersection_dim(const Matrix& a, const Matrix& b);

/// Basis (as columns) of span A ∩ span B.
Matrix intersection_basis(const Matrix& a, const Matrix& b);

/// True when the column spans of A and B coincide.
bool same_span(const Matrix& a, const Matrix& b);

}  // namespace fncalc::linalg
