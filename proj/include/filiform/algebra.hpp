#pragma once

#include <cstddef>
#include <vector>

#include "filiform/linalg.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

/// Structure constants of a finite-dimensional algebra with basis e_0..e_{dim-1}:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Dense and immutable; all entries share
/// one scalar mode (a single Approx entry coerces the whole table).
class AlgebraTable {
 public:
  /// The zero (abelian) table.
  explicit AlgebraTable(std::size_t dim);
  /// `dense` holds dim^3 entries in (i, j, k) row-major order.
  AlgebraTable(std::size_t dim, std::vector<Scalar> dense);

  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  /// Coordinates of [e_i, e_j].
  Vector bracket(std::size_t i, std::size_t j) const;
  AlgebraTable to_approx() const;

  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  std::size_t dim_;
  Mode mode_ = Mode::Exact;
  std::vector<Scalar> c_;
};

/// Mutable accumulator used by the family constructors.
class TableBuilder {
 public:
  explicit TableBuilder(std::size_t dim);
  /// Adds v to c[i][j][k].
  TableBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  AlgebraTable build() const { return AlgebraTable(dim_, c_); }

 private:
  std::size_t dim_;
  std::vector<Scalar> c_;
};

/// Bilinear product [x, y]. Throws DimensionMismatch.
Vector product(const AlgebraTable& table, const Vector& x, const Vector& y);

/// Max over basis triples of |[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]|,
/// where |v| is the max over coordinates of max(|re|, |im|). Real scalar in the
/// table's mode; exactly zero iff the table satisfies the Leibniz identity.
Scalar leibniz_defect(const AlgebraTable& table);

/// [dim L^1, dim L^2, ...] with L^{k+1} = [L^k, L]. Ends at 0, or at the first
/// repeated dimension for non-nilpotent tables.
std::vector<std::size_t> lower_central_series(const AlgebraTable& table, double pivot_tol = kPivotTol);

/// True iff the series is [n, n-2, n-3, ..., 1, 0] for n = dim.
bool is_filiform(const AlgebraTable& table, double pivot_tol = kPivotTol);

}  // namespace filiform
