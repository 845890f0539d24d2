#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "filiform/algebra.hpp"
#include "filiform/families.hpp"
#include "filiform/linalg.hpp"

namespace filiform {

using Rng = std::mt19937_64;

/// Adapted base change f: f(e_0) = sum_i A_i e_i, f(e_1) = sum_{i>=1} B_i e_i,
/// f(e_i) = [f(e_{i-1}), f(e_0)] for i >= 2.
struct AdaptedTransform {
  std::vector<Scalar> a;  // A_0..A_n
  std::vector<Scalar> b;  // B_1..B_n

  std::size_t dim() const { return a.size(); }
  const Scalar& A(std::size_t i) const { return a.at(i); }
  const Scalar& B(std::size_t i) const { return b.at(i - 1); }

  static AdaptedTransform identity(std::size_t dim);
  /// Transform whose only nonzero coefficients are A0, A1, B1, B2, B3.
  static AdaptedTransform from_generators(std::size_t dim, const Scalar& a0, const Scalar& a1, const Scalar& b1,
                                          const Scalar& b2 = 0, const Scalar& b3 = 0);

  friend bool operator==(const AdaptedTransform&, const AdaptedTransform&) = default;
};

/// A0 * B1 * (A0 + A1 * b) with b = 0 in dim 5 and b = b23 in dim 6.
Scalar nonsingularity_factor(const TLeibParams& p, const AdaptedTransform& t);
bool is_applicable(const TLeibParams& p, const AdaptedTransform& t);

/// Rows f(e_0)..f(e_n) in old coordinates. Throws SingularTransform when the
/// rows are linearly dependent, DimensionMismatch on size errors.
Matrix extend_basis(const AdaptedTransform& t, const AlgebraTable& table, double pivot_tol = kPivotTol);

/// Recomputes the structure constants in the basis f(e_i) by solving against
/// the basis matrix, then reads the new parameters off the TLeib template.
/// Throws SingularTransform, or TemplateMismatch if the result leaves the family.
TLeib5Params transform_params_oracle(const TLeib5Params& p, const AdaptedTransform& t, double tol = kResidualTol);
TLeib6Params transform_params_oracle(const TLeib6Params& p, const AdaptedTransform& t, double tol = kResidualTol);
TLeibParams transform_params_oracle(const TLeibParams& p, const AdaptedTransform& t, double tol = kResidualTol);

/// Isomorphism criterion for TLeib_5 applied verbatim. Throws SingularTransform when A0*B1 = 0.
TLeib5Params transform_params_closed5(const TLeib5Params& p, const Scalar& a0, const Scalar& a1, const Scalar& b1);
/// Isomorphism criterion for TLeib_6. Throws SingularTransform when A0*B1*(A0 + A1*b23) = 0.
TLeib6Params transform_params_closed6(const TLeib6Params& p, const Scalar& a0, const Scalar& a1, const Scalar& b1,
                                      const Scalar& b2, const Scalar& b3);
/// Closed form using the relevant generator coefficients of t.
TLeibParams transform_params_closed(const TLeibParams& p, const AdaptedTransform& t);

/// Gaussian rational with numerator and denominator of each part in [-9, 9].
Scalar random_gaussian_rational(Rng& rng);
/// Samples every A_i, B_j until the transform is applicable to p. Deterministic
/// per seed; throws Error after 1000 rejections.
AdaptedTransform random_adapted(std::size_t dim, const TLeibParams& p, std::uint64_t seed);
AdaptedTransform random_adapted(std::size_t dim, const TLeibParams& p, Rng& rng);

/// The transform that applies `first` to p and then `second` to the result,
/// read off the product of the basis matrices.
AdaptedTransform compose(const TLeibParams& p, const AdaptedTransform& first, const AdaptedTransform& second);
/// Inverse of t, expressed relative to the transformed parameters
/// transform_params_oracle(p, t).
AdaptedTransform inverse(const TLeibParams& p, const AdaptedTransform& t);

}  // namespace filiform
