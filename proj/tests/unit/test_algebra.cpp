#include <doctest.h>

#include "filiform/errors.hpp"
#include "support.hpp"

using namespace filiform;
using namespace filiform::testing;

namespace {

AlgebraTable tleib5(int b00, int b01, int b11, int b12) { return build_tleib5({b00, b01, b11, b12}); }

std::vector<std::size_t> series(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("product examples") {
  const AlgebraTable t = tleib5(0, 0, 0, 0);
  CHECK(product(t, unit_vector(5, 1), unit_vector(5, 0)) == unit_vector(5, 2));
  CHECK(product(t, zero_vector(5), unit_vector(5, 3)) == zero_vector(5));
  CHECK(product(tleib5(0, 0, 0, 1), unit_vector(5, 1), unit_vector(5, 2)) == unit_vector(5, 4));
  CHECK_THROWS_AS(product(t, unit_vector(4, 1), unit_vector(5, 0)), DimensionMismatch);
}

TEST_CASE("product is bilinear") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraTable t = build_tleib6(random_p6(rng));
    Vector x = random_vector(6, rng), x2 = random_vector(6, rng), y = random_vector(6, rng);
    Vector sum(6);
    for (std::size_t i = 0; i < 6; ++i) sum[i] = x[i] + x2[i];
    Vector lhs = product(t, sum, y);
    Vector a = product(t, x, y), b = product(t, x2, y);
    for (std::size_t i = 0; i < 6; ++i) REQUIRE(lhs[i] == a[i] + b[i]);
    Scalar c = random_gaussian_rational(rng);
    Vector scaled = x;
    for (auto& v : scaled) v *= c;
    Vector ps = product(t, y, scaled), p = product(t, y, x);
    for (std::size_t i = 0; i < 6; ++i) REQUIRE(ps[i] == c * p[i]);
  }
}

TEST_CASE("leibniz_defect examples") {
  CHECK(leibniz_defect(AlgebraTable(5)) == Scalar(0));
  CHECK(leibniz_defect(tleib5(1, 2, 3, 4)) == Scalar(0));

  // [e0,e0] = e1, [e1,e0] = e2 is the null-filiform Leibniz algebra.
  TableBuilder a(3);
  a.add(0, 0, 1, 1).add(1, 0, 2, 1);
  CHECK(leibniz_defect(a.build()) == Scalar(0));

  // [e1,e2] = e2 alone fails at (1,1,2): [e1,[e1,e2]] = e2, the right side is 0.
  TableBuilder b(3);
  b.add(1, 2, 2, 1);
  CHECK(leibniz_defect(b.build()) == Scalar(1));

  // [e0,e0] = e1, [e0,e1] = e2 fails at (0,0,0): [e0,[e0,e0]] = e2 while the
  // two derivation terms cancel.
  TableBuilder c(3);
  c.add(0, 0, 1, 1).add(0, 1, 2, 1);
  CHECK(leibniz_defect(c.build()) == Scalar(1));

  // The defect is the largest coordinate magnitude, in the table's mode.
  TableBuilder d(3);
  d.add(0, 0, 1, Scalar(Rational(0), Rational(3))).add(0, 1, 2, Scalar::approx(2.0));
  Scalar approx_defect = leibniz_defect(d.build());
  CHECK(approx_defect.mode() == Mode::Approx);
  CHECK(approx_defect.to_complex().real() == doctest::Approx(6.0));
}

TEST_CASE("lower central series") {
  CHECK(lower_central_series(tleib5(1, 0, 1, 0)) == series({5, 3, 2, 1, 0}));
  CHECK(lower_central_series(AlgebraTable(5)) == series({5, 0}));
  CHECK(lower_central_series(build_tleib6({1, 2, 3, 4, 5, 6})) == series({6, 4, 3, 2, 1, 0}));
  CHECK(lower_central_series(build_fleib({4, {1, 0}, 0})) == series({5, 3, 2, 1, 0}));

  // Non-nilpotent: [e0,e0] = e0 stabilizes at dimension 1.
  TableBuilder b(2);
  b.add(0, 0, 0, 1);
  CHECK(lower_central_series(b.build()) == series({2, 1}));
}

TEST_CASE("is_filiform") {
  CHECK(is_filiform(tleib5(0, 0, 0, 0)));
  CHECK_FALSE(is_filiform(AlgebraTable(5)));
  CHECK(is_filiform(build_fleib({4, {1, 0}, 0})));
  CHECK(is_filiform(build_tleib6({0, 0, 0, 0, 0, 0})));
  CHECK(is_filiform(tleib5(1, 0, 1, 0).to_approx()));
}

TEST_CASE("linear algebra helpers") {
  Matrix m = {{1, 2}, {3, 4}};
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(multiply(m, *inv) == identity_matrix(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix{{0, 0}, {0, 0}}) == 0);

  // Badly scaled rows keep full rank in Approx mode.
  Matrix scaled = {{Scalar::approx(1e6), Scalar::approx(1.0)}, {Scalar::approx(0.0), Scalar::approx(1e-4)}};
  CHECK(rank(scaled) == 2);
  auto scaled_inv = inverse(scaled);
  REQUIRE(scaled_inv);
  Matrix prod = multiply(scaled, *scaled_inv);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(approx_equal(prod[i][j], Scalar(i == j ? 1 : 0), 1e-9));
}
