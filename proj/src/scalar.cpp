#include "filiform/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>

#include "filiform/errors.hpp"

namespace filiform {
namespace {

GaussianRational gr_add(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational gr_sub(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, Rational(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational gr_div(const GaussianRational& a, const GaussianRational& b) {
  if (sgn(b.re) == 0 && sgn(b.im) == 0) throw DivisionByZero();
  if (sgn(b.im) == 0) return {a.re / b.re, a.im / b.re};
  Rational norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

std::complex<double> checked_div(std::complex<double> a, std::complex<double> b) {
  if (std::abs(b) <= std::numeric_limits<double>::min()) throw DivisionByZero();
  return a / b;
}

// Gaussian integers, used only to detect exact n-th roots.
struct GaussInt {
  mpz_class re;
  mpz_class im;
  bool operator==(const GaussInt&) const = default;
};

GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt gi_pow(GaussInt base, int k) {
  GaussInt result{1, 0};
  while (k > 0) {
    if (k & 1) result = gi_mul(result, base);
    base = gi_mul(base, base);
    k >>= 1;
  }
  return result;
}

mpz_class round_half_up(const Rational& q) {
  mpz_class twice_num = 2 * q.get_num() + q.get_den();
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), twice_num.get_mpz_t(), mpz_class(2 * q.get_den()).get_mpz_t());
  return out;
}

GaussianRational to_gr(const GaussInt& z) { return {Rational(z.re), Rational(z.im)}; }

// Integer Newton iteration for r^n = w over Z[i], seeded from a double
// approximation of the wanted branch.
std::optional<GaussInt> gaussian_int_root(const GaussInt& w, int n, const GaussianRational& seed) {
  GaussInt r{round_half_up(seed.re), round_half_up(seed.im)};
  for (int iter = 0; iter < 128; ++iter) {
    GaussInt power = gi_pow(r, n);
    if (power == w) return r;
    if (r.re == 0 && r.im == 0) return std::nullopt;
    GaussianRational deriv = gr_mul({Rational(n), Rational(0)}, to_gr(gi_pow(r, n - 1)));
    GaussianRational step = gr_div(gr_sub(to_gr(power), to_gr(w)), deriv);
    GaussianRational next = gr_sub(to_gr(r), step);
    GaussInt rounded{round_half_up(next.re), round_half_up(next.im)};
    if (rounded == r) return std::nullopt;
    r = std::move(rounded);
  }
  return std::nullopt;
}

std::complex<double> principal_root(std::complex<double> z, int n) {
  double arg = std::atan2(z.imag(), z.real());
  if (arg <= -std::numbers::pi) arg = std::numbers::pi;
  return std::polar(std::pow(std::abs(z), 1.0 / n), arg / n);
}

std::optional<GaussianRational> exact_root(const GaussianRational& a, int n, std::complex<double> approx) {
  // The norm is multiplicative, so it must be an nth power in Q; this rejects
  // most inputs before any Gaussian-integer work.
  Rational norm = a.re * a.re + a.im * a.im;
  mpz_class unused;
  if (!mpz_root(unused.get_mpz_t(), norm.get_num_mpz_t(), static_cast<unsigned long>(n)) ||
      !mpz_root(unused.get_mpz_t(), norm.get_den_mpz_t(), static_cast<unsigned long>(n))) {
    return std::nullopt;
  }
  // a = u / d with u in Z[i]; root(a) = root(u * d^(n-1)) / d and the inner
  // root, when it is in Q(i), is an algebraic integer, hence in Z[i].
  mpz_class d = lcm(a.re.get_den(), a.im.get_den());
  mpz_class dpow;
  mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n - 1));
  GaussInt w{a.re.get_num() * (d / a.re.get_den()) * dpow, a.im.get_num() * (d / a.im.get_den()) * dpow};
  if (!std::isfinite(approx.real()) || !std::isfinite(approx.imag())) return std::nullopt;
  GaussianRational seed{Rational(approx.real()) * d, Rational(approx.imag()) * d};
  auto root = gaussian_int_root(w, n, seed);
  if (!root) return std::nullopt;
  return GaussianRational{Rational(root->re, d), Rational(root->im, d)};
}

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
  throw ParseError("cannot parse scalar '" + std::string(text) + "': " + why);
}

}  // namespace

Scalar::Scalar(Rational re, Rational im) : value_(GaussianRational{std::move(re), std::move(im)}) {
  auto& g = std::get<GaussianRational>(value_);
  g.re.canonicalize();
  g.im.canonicalize();
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(Rational(num, den));
}

std::complex<double> Scalar::to_complex() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return {g->re.get_d(), g->im.get_d()};
  return std::get<std::complex<double>>(value_);
}

bool Scalar::is_exact_zero() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return sgn(g->re) == 0 && sgn(g->im) == 0;
  auto z = std::get<std::complex<double>>(value_);
  return z.real() == 0.0 && z.imag() == 0.0;
}

Scalar Scalar::conj() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return Scalar(g->re, -g->im);
  return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

Scalar Scalar::operator-() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return Scalar(-g->re, -g->im);
  return Scalar(-std::get<std::complex<double>>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    value_ = gr_add(exact(), rhs.exact());
  } else {
    value_ = to_complex() + rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    value_ = gr_sub(exact(), rhs.exact());
  } else {
    value_ = to_complex() - rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    value_ = gr_mul(exact(), rhs.exact());
  } else {
    value_ = to_complex() * rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    value_ = gr_div(exact(), rhs.exact());
  } else {
    value_ = checked_div(to_complex(), rhs.to_complex());
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) return false;
  if (a.is_exact()) return a.exact().re == b.exact().re && a.exact().im == b.exact().im;
  return a.to_complex() == b.to_complex();
}

Scalar arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
    case ArithOp::PowInt: {
      if (!b.is_exact() || sgn(b.exact().im) != 0 || b.exact().re.get_den() != 1 || !b.exact().re.get_num().fits_slong_p()) {
        throw Error("pow_int exponent must be an exact integer");
      }
      return pow_int(a, b.exact().re.get_num().get_si());
    }
  }
  throw Error("unknown arithmetic operation");
}

Scalar pow_int(const Scalar& a, long k) {
  if (k < 0) return pow_int(Scalar(1) / a, -k);
  Scalar result = a.is_exact() ? Scalar(1) : Scalar::approx(1.0);
  Scalar base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Scalar nth_root(const Scalar& a, int n, int branch) {
  if (n < 1) throw Error("nth_root: n must be positive");
  if (branch < 0 || branch >= n) throw Error("nth_root: branch must lie in [0, n)");
  if (a.is_exact_zero()) return a;
  std::complex<double> approx = principal_root(a.to_complex(), n);
  if (branch != 0) approx *= std::polar(1.0, 2.0 * std::numbers::pi * branch / n);
  if (a.is_exact()) {
    if (n == 1) return a;
    if (auto root = exact_root(a.exact(), n, approx)) return Scalar(root->re, root->im);
  }
  return Scalar::approx(approx);
}

bool is_zero(const Scalar& a, double tol, double scale) {
  if (a.is_exact()) return a.is_exact_zero();
  return a.abs() <= tol * std::max(1.0, scale);
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  auto x = a.to_complex();
  auto y = b.to_complex();
  double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

Mode common_mode(const Scalar& a, const Scalar& b) {
  return a.is_exact() && b.is_exact() ? Mode::Exact : Mode::Approx;
}

std::string to_string(const Scalar& s) {
  if (!s.is_exact()) {
    auto z = s.to_complex();
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", z.real(), z.imag());
    return buf;
  }
  const auto& g = s.exact();
  if (sgn(g.im) == 0) return g.re.get_str();
  std::string imag;
  if (g.im == 1) {
    imag = "i";
  } else if (g.im == -1) {
    imag = "-i";
  } else {
    imag = g.im.get_str() + "i";
  }
  if (sgn(g.re) == 0) return imag;
  return g.re.get_str() + (sgn(g.im) > 0 ? "+" : "") + imag;
}

Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) parse_fail(text, "empty");

  if (s.front() == '[') {
    double re = 0;
    double im = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "[%lf,%lf]%c", &re, &im, &tail) != 2) parse_fail(text, "expected [re, im]");
    return Scalar::approx(re, im);
  }

  std::size_t pos = 0;
  auto digits = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  // One signed term: [sign] ( number ['i'] | 'i' ).
  auto term = [&](bool sign_required, bool& imaginary) {
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (sign_required) {
      parse_fail(text, "expected '+' or '-'");
    }
    Rational value(1);
    std::string num = digits();
    if (!num.empty()) {
      mpz_class n(num, 10);
      mpz_class d(1);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den = digits();
        if (den.empty()) parse_fail(text, "missing denominator");
        d = mpz_class(den, 10);
        if (d == 0) parse_fail(text, "zero denominator");
      }
      value = Rational(n, d);
      value.canonicalize();
    }
    imaginary = pos < s.size() && s[pos] == 'i';
    if (imaginary) {
      ++pos;
    } else if (num.empty()) {
      parse_fail(text, "expected a number");
    }
    return sign < 0 ? Rational(-value) : value;
  };

  bool first_imag = false;
  Rational first = term(false, first_imag);
  if (first_imag) {
    if (pos != s.size()) parse_fail(text, "trailing characters");
    return Scalar(Rational(0), first);
  }
  if (pos == s.size()) return Scalar(first);
  bool second_imag = false;
  Rational second = term(true, second_imag);
  if (!second_imag) parse_fail(text, "second term must be imaginary");
  if (pos != s.size()) parse_fail(text, "trailing characters");
  return Scalar(first, second);
}

}  // namespace filiform
