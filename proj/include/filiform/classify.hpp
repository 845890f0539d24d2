#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/families.hpp"
#include "filiform/transform.hpp"

namespace filiform {

/// One of the subsets U_5^1..U_5^9 or U_6^1..U_6^19.
struct OrbitLabel {
  int dim = 5;
  int index = 1;

  /// "U5_2", "U6_14".
  std::string str() const;
  /// Inverse of str(); throws UnknownLabel.
  static OrbitLabel parse(std::string_view text);
  /// Labels whose orbits form a family indexed by invariants.
  bool parametric() const;
  std::size_t invariant_count() const;

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

std::vector<OrbitLabel> all_labels(int dim);

struct NamedScalar {
  std::string name;
  Scalar value;
  friend bool operator==(const NamedScalar&, const NamedScalar&) = default;
};

struct ClassifyOptions {
  /// Relative zero tolerance for Approx parameters (against the largest parameter).
  double zero_tol = kDefaultTol;
  /// Tolerance for comparing Approx invariants and canonical tuples.
  double residual_tol = kResidualTol;
};

template <typename P>
struct Canonical {
  P params;
  std::optional<AdaptedTransform> witness;
};

struct ClassificationResult {
  OrbitLabel label;
  std::vector<NamedScalar> invariants;
  /// Absent only for degenerate strata.
  std::optional<TLeibParams> canonical;
  std::optional<AdaptedTransform> witness;
  bool degenerate = false;
  std::string degenerate_reason;
};

/// 4*b00*b11 - b01^2.
Scalar delta(const TLeib5Params& p);
Scalar delta(const TLeib6Params& p);

OrbitLabel subset5(const TLeib5Params& p, double zero_tol = kDefaultTol);
OrbitLabel subset6(const TLeib6Params& p, double zero_tol = kDefaultTol);
OrbitLabel subset(const TLeibParams& p, double zero_tol = kDefaultTol);

/// U_5^1: [I1 = (b12/b11)^4 * Delta]; empty for the other labels.
std::vector<NamedScalar> invariants5(const TLeib5Params& p, double zero_tol = kDefaultTol);
/// Orbit functions of U_6^1, U_6^2, U_6^7, U_6^8 and U_6^11. On the U_6^1
/// stratum 2*b11 - b01*b23 = 0 the first invariant is undefined and omitted.
std::vector<NamedScalar> invariants6(const TLeib6Params& p, double zero_tol = kDefaultTol);

/// Reason text when p lies on a stratum the representative families never
/// reach (U_6^1 with 2*b11 = b01*b23, U_6^2 with b01 = b23*b00).
std::optional<std::string> degenerate_reason(const TLeib6Params& p, double zero_tol = kDefaultTol);

Canonical<TLeib5Params> canonical5(const TLeib5Params& p, const ClassifyOptions& opts = {});
/// Throws DegenerateStratum on the strata reported by degenerate_reason.
Canonical<TLeib6Params> canonical6(const TLeib6Params& p, const ClassifyOptions& opts = {});

ClassificationResult classify(const TLeibParams& p, const ClassifyOptions& opts = {});

struct IsomorphismCertificate {
  std::optional<TLeibParams> canonical_a;
  std::optional<TLeibParams> canonical_b;
  /// Adapted transform taking the first algebra to the second.
  std::optional<AdaptedTransform> witness;
  /// False when either input is degenerate: matching labels, invariants and
  /// flags are then necessary but not known to be sufficient.
  bool decided = true;
};

struct IsomorphismResult {
  bool isomorphic = false;
  IsomorphismCertificate certificate;
};

/// Throws DimensionMismatch when the tuples live in different dimensions.
IsomorphismResult isomorphic(const TLeibParams& a, const TLeibParams& b, const ClassifyOptions& opts = {});

/// Representative of a label: the fixed tuple for single orbits, the family
/// tuple evaluated at `lambdas` for parametric labels.
TLeibParams representative(const OrbitLabel& label, const std::vector<Scalar>& lambdas = {});

/// An exact member of a parametric subset whose invariants equal `targets`
/// exactly (rational in the targets, no radicals).
TLeibParams realize_invariants(const OrbitLabel& label, const std::vector<Scalar>& targets);

/// Random orbit member: the representative (with random exact lambdas for
/// parametric labels) pushed through random_adapted. Deterministic per seed.
TLeibParams sample_orbit_member(const OrbitLabel& label, std::uint64_t seed);

/// max_i |a_i - b_i| / max(1, |b_i|).
double residual(const TLeibParams& a, const TLeibParams& b);

}  // namespace filiform
