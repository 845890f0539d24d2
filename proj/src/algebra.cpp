#include "filiform/algebra.hpp"

#include <algorithm>
#include <string>

#include "filiform/errors.hpp"

namespace filiform {
namespace {

Scalar component_norm(const Scalar& x) {
  if (x.is_exact()) {
    Rational re = abs(x.exact().re);
    Rational im = abs(x.exact().im);
    return Scalar(re > im ? re : im);
  }
  auto z = x.to_complex();
  return Scalar::approx(std::max(std::abs(z.real()), std::abs(z.imag())));
}

bool norm_greater(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact().re > b.exact().re;
  return a.to_complex().real() > b.to_complex().real();
}

// sum_m v[m] * c[m][j][.]  (= [v, e_j])
Vector right_mult(const AlgebraTable& t, const Vector& v, std::size_t j) {
  const std::size_t n = t.dim();
  Vector out = zero_vector(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (v[m].is_exact_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& c = t.at(m, j, k);
      if (!c.is_exact_zero()) out[k] += v[m] * c;
    }
  }
  return out;
}

// sum_m v[m] * c[i][m][.]  (= [e_i, v])
Vector left_mult(const AlgebraTable& t, std::size_t i, const Vector& v) {
  const std::size_t n = t.dim();
  Vector out = zero_vector(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (v[m].is_exact_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& c = t.at(i, m, k);
      if (!c.is_exact_zero()) out[k] += v[m] * c;
    }
  }
  return out;
}

}  // namespace

AlgebraTable::AlgebraTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Scalar(0)) {}

AlgebraTable::AlgebraTable(std::size_t dim, std::vector<Scalar> dense) : dim_(dim), c_(std::move(dense)) {
  if (c_.size() != dim * dim * dim) {
    throw DimensionMismatch("table for dim " + std::to_string(dim) + " needs " + std::to_string(dim * dim * dim) +
                            " entries, got " + std::to_string(c_.size()));
  }
  bool exact = std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_exact(); });
  if (!exact) {
    mode_ = Mode::Approx;
    for (auto& x : c_) x = x.to_approx();
  }
}

Vector AlgebraTable::bracket(std::size_t i, std::size_t j) const {
  auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

AlgebraTable AlgebraTable::to_approx() const {
  std::vector<Scalar> dense = c_;
  for (auto& x : dense) x = x.to_approx();
  return AlgebraTable(dim_, std::move(dense));
}

TableBuilder::TableBuilder(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Scalar(0)) {}

TableBuilder& TableBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("table index out of range");
  c_[(i * dim_ + j) * dim_ + k] += v;
  return *this;
}

Vector product(const AlgebraTable& table, const Vector& x, const Vector& y) {
  const std::size_t n = table.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("product: vector length does not match table dim");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_exact_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = table.at(i, j, k);
        if (!c.is_exact_zero()) out[k] += w * c;
      }
    }
  }
  if (table.mode() == Mode::Approx) {
    for (auto& v : out) v = v.to_approx();
  }
  return out;
}

Scalar leibniz_defect(const AlgebraTable& table) {
  const std::size_t n = table.dim();
  Scalar worst = table.mode() == Mode::Exact ? Scalar(0) : Scalar::approx(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = table.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = left_mult(table, i, table.bracket(j, k));
        Vector r1 = right_mult(table, ij, k);
        Vector r2 = right_mult(table, table.bracket(i, k), j);
        for (std::size_t m = 0; m < n; ++m) {
          Scalar d = component_norm(lhs[m] - r1[m] + r2[m]);
          if (norm_greater(d, worst)) worst = d;
        }
      }
    }
  }
  return worst;
}

std::vector<std::size_t> lower_central_series(const AlgebraTable& table, double pivot_tol) {
  const std::size_t n = table.dim();
  std::vector<std::size_t> dims{n};
  Matrix basis = identity_matrix(n);
  while (true) {
    Matrix products;
    products.reserve(basis.size() * n);
    for (const auto& x : basis) {
      for (std::size_t j = 0; j < n; ++j) products.push_back(right_mult(table, x, j));
    }
    // row_basis unifies modes, so untouched exact zeros are fine here.
    Matrix next = row_basis(std::move(products), pivot_tol);
    if (next.size() == dims.back()) break;
    dims.push_back(next.size());
    if (next.empty()) break;
    basis = std::move(next);
  }
  return dims;
}

bool is_filiform(const AlgebraTable& table, double pivot_tol) {
  const std::size_t n = table.dim();
  if (n < 2) return false;
  std::vector<std::size_t> expected{n};
  for (std::size_t i = 2; i <= n; ++i) expected.push_back(n - i);
  return lower_central_series(table, pivot_tol) == expected;
}

}  // namespace filiform
