#include "filiform/families.hpp"

#include <string>

#include "filiform/errors.hpp"

namespace filiform {
namespace {

constexpr int kMaxN = 9;  // dim <= 10

void check_family_shape(int n, std::size_t coeffs, const char* family) {
  if (n < 3 || n > kMaxN) {
    throw BadDimension(std::string(family) + ": n must lie in [3, " + std::to_string(kMaxN) + "], got " +
                       std::to_string(n));
  }
  if (coeffs != static_cast<std::size_t>(n - 2)) {
    throw BadDimension(std::string(family) + ": expected " + std::to_string(n - 2) + " coefficients, got " +
                       std::to_string(coeffs));
  }
}

// Shared lines of TLeib_{n+1}: [e_i,e_0] = e_{i+1} (1 <= i <= n-1),
// [e_0,e_i] = -e_{i+1} (2 <= i <= n-1), [e_0,e_1] = -e_2 + ...
TableBuilder tleib_skeleton(std::size_t dim) {
  const std::size_t n = dim - 1;
  TableBuilder t(dim);
  for (std::size_t i = 1; i + 1 <= n; ++i) t.add(i, 0, i + 1, 1);
  for (std::size_t i = 2; i + 1 <= n; ++i) t.add(0, i, i + 1, -1);
  t.add(0, 1, 2, -1);
  return t;
}

}  // namespace

std::size_t dim_of(const TLeibParams& p) {
  return std::visit([](const auto& q) { return std::decay_t<decltype(q)>::kDim; }, p);
}

std::vector<Scalar> values_of(const TLeibParams& p) {
  return std::visit(
      [](const auto& q) {
        auto v = q.values();
        return std::vector<Scalar>(v.begin(), v.end());
      },
      p);
}

TLeibParams tleib_from_values(const std::vector<Scalar>& v) {
  if (v.size() == TLeib5Params::kCount) return TLeib5Params{v[0], v[1], v[2], v[3]};
  if (v.size() == TLeib6Params::kCount) return TLeib6Params{v[0], v[1], v[2], v[3], v[4], v[5]};
  throw BadDimension("TLeib parameter tuples have 4 (dim 5) or 6 (dim 6) entries, got " + std::to_string(v.size()));
}

AlgebraTable build_fleib(const FLeibParams& p) {
  check_family_shape(p.n, p.alphas.size(), "FLeib");
  const int n = p.n;
  auto alpha = [&](int k) -> const Scalar& { return p.alphas[static_cast<std::size_t>(k - 3)]; };
  TableBuilder t(static_cast<std::size_t>(n + 1));
  t.add(0, 0, 2, 1);
  for (int i = 1; i <= n - 1; ++i) t.add(i, 0, i + 1, 1);
  // [e0,e1] = alpha_3 e_3 + ... + alpha_{n-1} e_{n-1} + theta e_n
  for (int k = 3; k <= n - 1; ++k) t.add(0, 1, k, alpha(k));
  t.add(0, 1, n, p.theta);
  // [e_j,e1] = alpha_3 e_{j+2} + ... + alpha_{n+1-j} e_n, 1 <= j <= n-2
  for (int j = 1; j <= n - 2; ++j) {
    for (int k = 3; k <= n + 1 - j; ++k) t.add(j, 1, j + k - 1, alpha(k));
  }
  return t.build();
}

AlgebraTable build_sleib(const SLeibParams& p) {
  check_family_shape(p.n, p.betas.size(), "SLeib");
  const int n = p.n;
  auto beta = [&](int k) -> const Scalar& { return p.betas[static_cast<std::size_t>(k - 3)]; };
  TableBuilder t(static_cast<std::size_t>(n + 1));
  t.add(0, 0, 2, 1);
  for (int i = 2; i <= n - 1; ++i) t.add(i, 0, i + 1, 1);
  for (int k = 3; k <= n; ++k) t.add(0, 1, k, beta(k));
  t.add(1, 1, n, p.gamma);
  for (int j = 2; j <= n - 2; ++j) {
    for (int k = 3; k <= n + 1 - j; ++k) t.add(j, 1, j + k - 1, beta(k));
  }
  return t.build();
}

AlgebraTable build_tleib5(const TLeib5Params& p) {
  TableBuilder t = tleib_skeleton(5);
  t.add(0, 0, 4, p.b00);
  t.add(0, 1, 4, p.b01);
  t.add(1, 1, 4, p.b11);
  t.add(1, 2, 4, p.b12);
  t.add(2, 1, 4, -p.b12);
  return t.build();
}

AlgebraTable build_tleib6(const TLeib6Params& p) {
  TableBuilder t = tleib_skeleton(6);
  t.add(0, 0, 5, p.b00);
  t.add(0, 1, 5, p.b01);
  t.add(1, 1, 5, p.b11);
  // [e1,e2] = -[e2,e1] = b12 e4 + b13 e5
  t.add(1, 2, 4, p.b12).add(1, 2, 5, p.b13);
  t.add(2, 1, 4, -p.b12).add(2, 1, 5, -p.b13);
  // [e1,e3] = -[e3,e1] = b12 e5
  t.add(1, 3, 5, p.b12).add(3, 1, 5, -p.b12);
  // [e1,e4] = -[e4,e1] = -[e2,e3] = [e3,e2] = -b23 e5
  t.add(1, 4, 5, -p.b23).add(4, 1, 5, p.b23);
  t.add(2, 3, 5, p.b23).add(3, 2, 5, -p.b23);
  return t.build();
}

AlgebraTable build_tleib(const TLeibParams& p) {
  return std::visit(
      [](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, TLeib5Params>) {
          return build_tleib5(q);
        } else {
          return build_tleib6(q);
        }
      },
      p);
}

}  // namespace filiform
