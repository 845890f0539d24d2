#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <variant>

namespace filiform {

using Rational = mpq_class;

/// Default relative tolerance for Approx equality tests.
inline constexpr double kDefaultTol = 1e-12;
/// Default tolerance for residuals after canonicalization (radical roundoff
/// compounds through the witness transforms).
inline constexpr double kResidualTol = 1e-9;

enum class Mode { Exact, Approx };

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
struct GaussianRational {
  Rational re;
  Rational im;
};

/// A complex scalar, either exact (Gaussian rational) or approximate (pair of
/// doubles). Arithmetic between an Exact and an Approx operand yields Approx.
class Scalar {
 public:
  Scalar() : value_(GaussianRational{0, 0}) {}
  Scalar(int v) : value_(GaussianRational{v, 0}) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(GaussianRational{v, 0}) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : Scalar(std::move(re), Rational(0)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im);

  static Scalar approx(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }
  static Scalar approx(std::complex<double> z) { return Scalar(z); }
  /// Shorthand for the exact rational num/den.
  static Scalar ratio(long num, long den);
  static Scalar imag_unit() { return Scalar(Rational(0), Rational(1)); }

  Mode mode() const { return std::holds_alternative<GaussianRational>(value_) ? Mode::Exact : Mode::Approx; }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// Precondition: is_exact().
  const GaussianRational& exact() const { return std::get<GaussianRational>(value_); }
  std::complex<double> to_complex() const;
  Scalar to_approx() const { return Scalar(to_complex()); }

  /// True iff the value is exactly zero (both modes, no tolerance).
  bool is_exact_zero() const;
  double abs() const { return std::abs(to_complex()); }
  Scalar conj() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Structural equality: same mode and identical value. An Exact scalar never
  /// equals an Approx one; use approx_equal for tolerance comparisons.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(std::complex<double> z) : value_(z) {}

  std::variant<GaussianRational, std::complex<double>> value_;
};

enum class ArithOp { Add, Sub, Mul, Div, Neg, PowInt };

/// Dispatching form of the arithmetic operators. For Neg the second operand is
/// ignored; for PowInt it must be an exact integer exponent.
Scalar arith(ArithOp op, const Scalar& a, const Scalar& b);

/// a^k for any integer k; negative k inverts (DivisionByZero when a == 0).
Scalar pow_int(const Scalar& a, long k);

/// The n-th root of a with argument in (-pi/n, pi/n], rotated
/// counterclockwise by branch*2pi/n. Exact when the root is itself a Gaussian
/// rational, Approx otherwise.
Scalar nth_root(const Scalar& a, int n, int branch = 0);

/// Exact mode ignores tol. Approx mode: |a| <= tol * max(1, scale).
bool is_zero(const Scalar& a, double tol = kDefaultTol, double scale = 1.0);

/// Exact equality when both are exact, otherwise |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTol);

/// Coerces to the common mode of the pair (Approx wins).
Mode common_mode(const Scalar& a, const Scalar& b);

/// Text syntax: `a/b`, `a/b+c/di`, `-3/2+1/4i`, `2`, `i`, `-2/3i`.
std::string to_string(const Scalar& s);
/// Parses the text syntax above. Throws ParseError.
Scalar parse_scalar(std::string_view text);

}  // namespace filiform
