#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "filiform/algebra.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

/// FLeib_{n+1}: alphas holds alpha_3..alpha_n (n - 2 entries).
struct FLeibParams {
  int n = 3;
  std::vector<Scalar> alphas;
  Scalar theta;
};

/// SLeib_{n+1}: betas holds beta_3..beta_n (n - 2 entries).
struct SLeibParams {
  int n = 3;
  std::vector<Scalar> betas;
  Scalar gamma;
};

/// L(b00, b01, b11, b12) in TLeib_5.
struct TLeib5Params {
  static constexpr std::size_t kDim = 5;
  static constexpr std::size_t kCount = 4;
  static constexpr std::array<std::string_view, kCount> kNames{"b00", "b01", "b11", "b12"};

  Scalar b00, b01, b11, b12;

  std::array<Scalar, kCount> values() const { return {b00, b01, b11, b12}; }
  static TLeib5Params from_values(const std::array<Scalar, kCount>& v) { return {v[0], v[1], v[2], v[3]}; }
  friend bool operator==(const TLeib5Params&, const TLeib5Params&) = default;
};

/// L(b00, b01, b11, b12, b13, b23) in TLeib_6.
struct TLeib6Params {
  static constexpr std::size_t kDim = 6;
  static constexpr std::size_t kCount = 6;
  static constexpr std::array<std::string_view, kCount> kNames{"b00", "b01", "b11", "b12", "b13", "b23"};

  Scalar b00, b01, b11, b12, b13, b23;

  std::array<Scalar, kCount> values() const { return {b00, b01, b11, b12, b13, b23}; }
  static TLeib6Params from_values(const std::array<Scalar, kCount>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
  friend bool operator==(const TLeib6Params&, const TLeib6Params&) = default;
};

using TLeibParams = std::variant<TLeib5Params, TLeib6Params>;

std::size_t dim_of(const TLeibParams& p);
std::vector<Scalar> values_of(const TLeibParams& p);
/// Builds TLeib5Params or TLeib6Params from 4 or 6 values; BadDimension otherwise.
TLeibParams tleib_from_values(const std::vector<Scalar>& values);

/// True iff every parameter is exact.
template <typename P>
bool params_exact(const P& p) {
  for (const auto& v : p.values()) {
    if (!v.is_exact()) return false;
  }
  return true;
}

/// Coerces every parameter to Approx when any of them is Approx.
template <typename P>
P unify_params(const P& p) {
  if (params_exact(p)) return p;
  auto v = p.values();
  for (auto& x : v) x = x.to_approx();
  return P::from_values(v);
}

/// Throws BadDimension unless 3 <= n <= 9 and there are n - 2 alphas.
AlgebraTable build_fleib(const FLeibParams& p);
AlgebraTable build_sleib(const SLeibParams& p);
AlgebraTable build_tleib5(const TLeib5Params& p);
AlgebraTable build_tleib6(const TLeib6Params& p);
AlgebraTable build_tleib(const TLeibParams& p);

}  // namespace filiform
