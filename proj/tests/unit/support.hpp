#pragma once

#include <random>

#include "filiform/classify.hpp"

namespace filiform::testing {

/// Random Gaussian rational; with zero_prob the value is 0 instead.
inline Scalar random_scalar(Rng& rng, double zero_prob = 0.0) {
  if (zero_prob > 0.0 && std::bernoulli_distribution(zero_prob)(rng)) return Scalar(0);
  return random_gaussian_rational(rng);
}

inline Scalar random_nonzero(Rng& rng) {
  for (;;) {
    Scalar x = random_gaussian_rational(rng);
    if (!x.is_exact_zero()) return x;
  }
}

inline TLeib5Params random_p5(Rng& rng, double zero_prob = 0.0) {
  return {random_scalar(rng, zero_prob), random_scalar(rng, zero_prob), random_scalar(rng, zero_prob),
          random_scalar(rng, zero_prob)};
}

inline TLeib6Params random_p6(Rng& rng, double zero_prob = 0.0) {
  return {random_scalar(rng, zero_prob), random_scalar(rng, zero_prob), random_scalar(rng, zero_prob),
          random_scalar(rng, zero_prob), random_scalar(rng, zero_prob), random_scalar(rng, zero_prob)};
}

inline TLeibParams random_params(std::size_t dim, Rng& rng, double zero_prob = 0.0) {
  if (dim == 5) return random_p5(rng, zero_prob);
  return random_p6(rng, zero_prob);
}

inline std::vector<Scalar> random_vector(std::size_t n, Rng& rng) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, 0.2));
  return v;
}

/// Exact equality for exact tuples, residual below tol otherwise.
inline bool matches(const TLeibParams& got, const TLeibParams& want, double tol = kResidualTol) {
  auto g = values_of(got);
  bool exact = true;
  for (const auto& x : g) exact = exact && x.is_exact();
  for (const auto& x : values_of(want)) exact = exact && x.is_exact();
  return exact ? got == want : residual(got, want) < tol;
}

}  // namespace filiform::testing
