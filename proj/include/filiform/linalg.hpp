#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "filiform/scalar.hpp"

namespace filiform {

/// Coordinates of an algebra element in the basis e_0..e_n.
using Vector = std::vector<Scalar>;
/// Row-major dense matrix; rows are vectors.
using Matrix = std::vector<Vector>;

/// Pivot threshold for Approx-mode elimination, relative to the largest entry.
inline constexpr double kPivotTol = 1e-10;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Matrix identity_matrix(std::size_t n);

bool all_exact(const Matrix& m);
/// Converts every entry to Approx when any entry is Approx.
Matrix unify_mode(Matrix m);

/// Row echelon form of the span of `rows`: the returned rows are linearly
/// independent and span the same subspace. Exact mode uses exact zero tests;
/// Approx mode uses complete pivoting with threshold pivot_tol * max|entry|.
Matrix row_basis(Matrix rows, double pivot_tol = kPivotTol);

std::size_t rank(const Matrix& rows, double pivot_tol = kPivotTol);

/// Gauss-Jordan inverse; nullopt when the matrix is singular (exactly, or
/// below the pivot threshold in Approx mode).
std::optional<Matrix> inverse(const Matrix& m, double pivot_tol = kPivotTol);

Matrix multiply(const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vector multiply(const Vector& v, const Matrix& m);

}  // namespace filiform
