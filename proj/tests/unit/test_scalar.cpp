#include <doctest.h>

#include <cmath>
#include <numbers>

#include "filiform/errors.hpp"
#include "support.hpp"

using namespace filiform;
using filiform::testing::random_nonzero;

TEST_CASE("scalar arithmetic examples") {
  CHECK(arith(ArithOp::Add, Scalar::ratio(1, 2), Scalar::ratio(1, 2)) == Scalar(1));
  CHECK(arith(ArithOp::Mul, Scalar::imag_unit(), Scalar::imag_unit()) == Scalar(-1));
  CHECK_THROWS_AS(arith(ArithOp::Div, Scalar(1), Scalar(0)), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK(arith(ArithOp::Neg, Scalar(3), Scalar(0)) == Scalar(-3));
  CHECK(arith(ArithOp::PowInt, Scalar(2), Scalar(-2)) == Scalar::ratio(1, 4));
  CHECK(pow_int(Scalar(Rational(1), Rational(1)), 4) == Scalar(-4));
  CHECK(pow_int(Scalar(5), 0) == Scalar(1));
  CHECK_THROWS_AS(pow_int(Scalar(0), -1), DivisionByZero);
}

TEST_CASE("mixed modes coerce to approx") {
  Scalar x = Scalar(1) + Scalar::approx(0.5);
  CHECK(x.mode() == Mode::Approx);
  CHECK(x.to_complex() == std::complex<double>(1.5, 0.0));
  CHECK(common_mode(Scalar(1), Scalar::approx(1.0)) == Mode::Approx);
  CHECK(common_mode(Scalar(1), Scalar(2)) == Mode::Exact);
  CHECK_FALSE(Scalar(1) == Scalar::approx(1.0));
  CHECK(approx_equal(Scalar(1), Scalar::approx(1.0 + 1e-14)));
  CHECK_THROWS_AS(Scalar::approx(1.0) / Scalar::approx(0.0), DivisionByZero);
}

TEST_CASE("nth_root examples") {
  CHECK(nth_root(Scalar(16), 4, 0) == Scalar(2));
  CHECK(nth_root(Scalar(-1), 2, 0) == Scalar::imag_unit());
  Scalar r = nth_root(Scalar(2), 2, 0);
  CHECK(r.mode() == Mode::Approx);
  CHECK(r.to_complex().real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.to_complex().imag() == 0.0);
  // Branches rotate counterclockwise from the principal root.
  CHECK(nth_root(Scalar(16), 4, 1) == Scalar(Rational(0), Rational(2)));
  CHECK(nth_root(Scalar(16), 4, 2) == Scalar(-2));
  CHECK(nth_root(Scalar(-8), 3, 0).mode() == Mode::Approx);
  CHECK(nth_root(Scalar(-8), 3, 1) == Scalar(-2));
  CHECK(nth_root(Scalar(Rational(-16, 81)), 4, 0).mode() == Mode::Approx);
  CHECK(nth_root(Scalar(Rational(0), Rational(2)), 2, 0) == Scalar(Rational(1), Rational(1)));
  CHECK(nth_root(Scalar(0), 5, 3) == Scalar(0));
  CHECK_THROWS_AS(nth_root(Scalar(1), 3, 3), Error);
  CHECK_THROWS_AS(nth_root(Scalar(1), 0, 0), Error);
}

TEST_CASE("is_zero") {
  CHECK(is_zero(Scalar(0)));
  CHECK_FALSE(is_zero(Scalar(Rational(1, 1000000000))));
  CHECK(is_zero(Scalar::approx(1e-15), 1e-12));
  CHECK_FALSE(is_zero(Scalar::approx(1e-9), 1e-12));
  CHECK(is_zero(Scalar::approx(1e-9), 1e-12, 1e4));
}

TEST_CASE("text syntax round-trips") {
  for (const char* text : {"0", "2", "-3/2", "i", "-i", "2/3i", "-3/2+1/4i", "1-i", "7/5-2/9i"}) {
    CAPTURE(text);
    CHECK(to_string(parse_scalar(text)) == text);
  }
  CHECK(parse_scalar(" 4/2 ") == Scalar(2));
  CHECK(parse_scalar("+1/2-i") == Scalar(Rational(1, 2), Rational(-1)));
  CHECK(parse_scalar("[1.5, -2]") == Scalar::approx(1.5, -2.0));
  Scalar x = Scalar::approx(0.1, 1.0 / 3.0);
  CHECK(parse_scalar(to_string(x)) == x);
  for (const char* bad : {"", "1/0", "abc", "1/", "1+", "2i3", "[1,", "1//2", "i+i+i"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), ParseError);
  }
}

TEST_CASE("field axioms hold exactly on random Gaussian rationals") {
  Rng rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    Scalar a = random_gaussian_rational(rng);
    Scalar b = random_gaussian_rational(rng);
    Scalar c = random_gaussian_rational(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a - a == Scalar(0));
    if (!a.is_exact_zero()) REQUIRE(a * (Scalar(1) / a) == Scalar(1));
  }
}

TEST_CASE("nth_root powers back to its argument on every branch") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar r = random_nonzero(rng);
    for (int n = 1; n <= 6; ++n) {
      // A perfect power, one of whose roots is exactly r, and a generic value.
      const Scalar power = pow_int(r, n);
      for (const Scalar& a : {power, random_nonzero(rng)}) {
        bool found_r = false;
        for (int k = 0; k < n; ++k) {
          Scalar root = nth_root(a, n, k);
          Scalar back = pow_int(root, n);
          if (root.is_exact()) {
            REQUIRE(back == a);
            found_r = found_r || root == r;
          } else {
            REQUIRE(std::abs(back.to_complex() - a.to_complex()) <= 1e-12 * a.abs());
          }
        }
        if (a == power) REQUIRE(found_r);
      }
    }
  }
}

TEST_CASE("principal branch has argument in (-pi/n, pi/n]") {
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    Scalar a = random_nonzero(rng);
    for (int n = 2; n <= 6; ++n) {
      double arg = std::arg(nth_root(a, n, 0).to_complex());
      REQUIRE(arg > -std::numbers::pi / n - 1e-12);
      REQUIRE(arg <= std::numbers::pi / n + 1e-12);
    }
  }
}

TEST_CASE("exact-then-coerce agrees with coerce-then-approx") {
  Rng rng(14);
  std::uniform_int_distribution<long> num(1, 1000);
  std::uniform_int_distribution<int> sign(0, 1);
  auto sample = [&] {
    auto part = [&] { return Rational(num(rng) * (sign(rng) ? 1 : -1), num(rng)); };
    return Scalar(part(), part());
  };
  for (int trial = 0; trial < 2000; ++trial) {
    Scalar a = sample();
    Scalar b = sample();
    for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div}) {
      auto exact = arith(op, a, b).to_complex();
      auto approx = arith(op, a.to_approx(), b.to_approx()).to_complex();
      REQUIRE(std::abs(exact - approx) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
  }
}
