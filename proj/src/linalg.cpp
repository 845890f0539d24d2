#include "filiform/linalg.hpp"

#include <algorithm>
#include <utility>

#include "filiform/errors.hpp"

namespace filiform {
namespace {

double max_magnitude(const Matrix& m) {
  double best = 0.0;
  for (const auto& row : m) {
    for (const auto& x : row) best = std::max(best, x.abs());
  }
  return best;
}

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Picks a pivot in rows [r0, end) over the given columns. Exact mode takes the
// first nonzero entry; Approx mode takes the largest entry above threshold.
std::optional<Pivot> find_pivot(const Matrix& m, std::size_t r0, const std::vector<std::size_t>& cols, bool exact,
                                double threshold) {
  std::optional<Pivot> best;
  double best_mag = threshold;
  for (std::size_t c : cols) {
    for (std::size_t r = r0; r < m.size(); ++r) {
      if (exact) {
        if (!m[r][c].is_exact_zero()) return Pivot{r, c};
      } else {
        double mag = m[r][c].abs();
        if (mag > best_mag) {
          best_mag = mag;
          best = Pivot{r, c};
        }
      }
    }
  }
  return best;
}

// Scales every Approx row to unit max magnitude. Rank is unchanged, and the
// global pivot threshold then behaves like a per-row relative test.
void equilibrate(Matrix& a, Matrix* companion = nullptr) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    double m = 0.0;
    for (const auto& x : a[r]) m = std::max(m, x.abs());
    if (m == 0.0) continue;
    Scalar s = Scalar::approx(1.0 / m, 0.0);
    for (auto& x : a[r]) x *= s;
    if (companion) {
      for (auto& x : (*companion)[r]) x *= s;
    }
  }
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = Scalar(1);
  return v;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.push_back(unit_vector(n, i));
  return m;
}

bool all_exact(const Matrix& m) {
  return std::all_of(m.begin(), m.end(), [](const Vector& row) {
    return std::all_of(row.begin(), row.end(), [](const Scalar& x) { return x.is_exact(); });
  });
}

Matrix unify_mode(Matrix m) {
  if (all_exact(m)) return m;
  for (auto& row : m) {
    for (auto& x : row) x = x.to_approx();
  }
  return m;
}

Matrix row_basis(Matrix rows, double pivot_tol) {
  rows = unify_mode(std::move(rows));
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  const bool exact = all_exact(rows);
  if (!exact) equilibrate(rows);
  const double threshold = exact ? 0.0 : pivot_tol * max_magnitude(rows);

  std::vector<std::size_t> free_cols(ncols);
  for (std::size_t c = 0; c < ncols; ++c) free_cols[c] = c;

  std::size_t r0 = 0;
  while (r0 < rows.size() && !free_cols.empty()) {
    auto pivot = find_pivot(rows, r0, free_cols, exact, threshold);
    if (!pivot) break;
    std::swap(rows[r0], rows[pivot->row]);
    const std::size_t c = pivot->col;
    for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_exact_zero()) continue;
      Scalar factor = rows[r][c] / rows[r0][c];
      for (std::size_t k = 0; k < ncols; ++k) {
        if (!rows[r0][k].is_exact_zero()) rows[r][k] -= factor * rows[r0][k];
      }
      rows[r][c] = exact ? Scalar(0) : Scalar::approx(0.0);
    }
    free_cols.erase(std::find(free_cols.begin(), free_cols.end(), c));
    ++r0;
  }
  rows.resize(r0);
  return rows;
}

std::size_t rank(const Matrix& rows, double pivot_tol) { return row_basis(rows, pivot_tol).size(); }

std::optional<Matrix> inverse(const Matrix& m, double pivot_tol) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("inverse: matrix is not square");
  }
  Matrix a = unify_mode(m);
  const bool exact = all_exact(a);
  Matrix inv = identity_matrix(n);
  if (!exact) {
    for (auto& row : inv) {
      for (auto& x : row) x = x.to_approx();
    }
    equilibrate(a, &inv);
  }
  const double threshold = exact ? 0.0 : pivot_tol * max_magnitude(a);

  for (std::size_t col = 0; col < n; ++col) {
    // Partial pivoting by column keeps the solution in the original order.
    std::size_t pivot_row = n;
    double best = threshold;
    for (std::size_t r = col; r < n; ++r) {
      if (exact) {
        if (!a[r][col].is_exact_zero()) {
          pivot_row = r;
          break;
        }
      } else if (a[r][col].abs() > best) {
        best = a[r][col].abs();
        pivot_row = r;
      }
    }
    if (pivot_row == n) return std::nullopt;
    std::swap(a[col], a[pivot_row]);
    std::swap(inv[col], inv[pivot_row]);
    Scalar p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_exact_zero()) continue;
      Scalar factor = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        if (!a[col][k].is_exact_zero()) a[r][k] -= factor * a[col][k];
        if (!inv[col][k].is_exact_zero()) inv[r][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(multiply(row, b));
  return out;
}

Vector multiply(const Vector& v, const Matrix& m) {
  if (v.size() != m.size()) throw DimensionMismatch("vector/matrix size mismatch");
  const std::size_t ncols = m.empty() ? 0 : m.front().size();
  Vector out = zero_vector(ncols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_exact_zero()) continue;
    for (std::size_t k = 0; k < ncols; ++k) {
      if (!m[i][k].is_exact_zero()) out[k] += v[i] * m[i][k];
    }
  }
  return out;
}

}  // namespace filiform
