#include "filiform/transform.hpp"

#include <algorithm>
#include <string>

#include "filiform/errors.hpp"

namespace filiform {
namespace {

template <typename P>
AlgebraTable build(const P& p) {
  if constexpr (std::is_same_v<P, TLeib5Params>) {
    return build_tleib5(p);
  } else {
    return build_tleib6(p);
  }
}

template <typename P>
P read_template(const std::vector<Scalar>& c) {
  constexpr std::size_t n = P::kDim;
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return c[(i * n + j) * n + k]; };
  if constexpr (std::is_same_v<P, TLeib5Params>) {
    return {at(0, 0, 4), at(0, 1, 4), at(1, 1, 4), at(1, 2, 4)};
  } else {
    return {at(0, 0, 5), at(0, 1, 5), at(1, 1, 5), at(1, 2, 4), at(1, 2, 5), at(2, 3, 5)};
  }
}

void check_shape(const AdaptedTransform& t, std::size_t dim) {
  if (t.a.size() != dim || t.b.size() + 1 != dim) {
    throw DimensionMismatch("transform has " + std::to_string(t.a.size()) + " A and " + std::to_string(t.b.size()) +
                            " B coefficients; dim " + std::to_string(dim) + " needs " + std::to_string(dim) + " and " +
                            std::to_string(dim - 1));
  }
}

template <typename P>
P oracle(const P& p, const AdaptedTransform& t, double tol) {
  constexpr std::size_t n = P::kDim;
  check_shape(t, n);
  AlgebraTable table = build(p);
  Matrix basis = extend_basis(t, table);
  auto basis_inv = inverse(basis);
  if (!basis_inv) throw SingularTransform("basis matrix is singular");

  std::vector<Scalar> dense;
  dense.reserve(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vector coords = multiply(product(table, basis[x], basis[y]), *basis_inv);
      dense.insert(dense.end(), coords.begin(), coords.end());
    }
  }
  AlgebraTable transformed(n, std::move(dense));

  std::vector<Scalar> flat;
  flat.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) flat.push_back(transformed.at(i, j, k));
  P result = unify_params(read_template<P>(flat));

  AlgebraTable expected = build(result);
  double scale = 1.0;
  if (transformed.mode() == Mode::Approx) {
    for (const auto& x : flat) scale = std::max(scale, x.abs());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& got = transformed.at(i, j, k);
        const Scalar& want = expected.at(i, j, k);
        bool ok = transformed.mode() == Mode::Exact && expected.mode() == Mode::Exact
                      ? got == want
                      : (got - want).abs() <= tol * scale;
        if (!ok) {
          throw TemplateMismatch("transformed product [e" + std::to_string(i) + ", e" + std::to_string(j) +
                                 "] coordinate " + std::to_string(k) + " is " + to_string(got) + ", template has " +
                                 to_string(want));
        }
      }
    }
  }
  return result;
}

void require_nonzero(const Scalar& x, const char* what) {
  if (x.is_exact_zero()) throw SingularTransform(std::string(what) + " vanishes");
}

}  // namespace

AdaptedTransform AdaptedTransform::identity(std::size_t dim) { return from_generators(dim, 1, 0, 1); }

AdaptedTransform AdaptedTransform::from_generators(std::size_t dim, const Scalar& a0, const Scalar& a1,
                                                   const Scalar& b1, const Scalar& b2, const Scalar& b3) {
  if (dim < 4) throw BadDimension("adapted transforms need dim >= 4");
  AdaptedTransform t{zero_vector(dim), zero_vector(dim - 1)};
  t.a[0] = a0;
  t.a[1] = a1;
  t.b[0] = b1;
  t.b[1] = b2;
  t.b[2] = b3;
  return t;
}

Scalar nonsingularity_factor(const TLeibParams& p, const AdaptedTransform& t) {
  check_shape(t, dim_of(p));
  Scalar b = std::holds_alternative<TLeib6Params>(p) ? std::get<TLeib6Params>(p).b23 : Scalar(0);
  return t.A(0) * t.B(1) * (t.A(0) + t.A(1) * b);
}

bool is_applicable(const TLeibParams& p, const AdaptedTransform& t) {
  Scalar f = nonsingularity_factor(p, t);
  return f.is_exact() ? !f.is_exact_zero() : !is_zero(f);
}

Matrix extend_basis(const AdaptedTransform& t, const AlgebraTable& table, double pivot_tol) {
  const std::size_t n = table.dim();
  check_shape(t, n);
  Matrix rows;
  rows.reserve(n);
  rows.push_back(t.a);
  Vector second = zero_vector(n);
  std::copy(t.b.begin(), t.b.end(), second.begin() + 1);
  rows.push_back(std::move(second));
  for (std::size_t i = 2; i < n; ++i) rows.push_back(product(table, rows[i - 1], rows[0]));
  rows = unify_mode(std::move(rows));
  if (rank(rows, pivot_tol) != n) throw SingularTransform("images f(e_0)..f(e_n) are linearly dependent");
  return rows;
}

TLeib5Params transform_params_oracle(const TLeib5Params& p, const AdaptedTransform& t, double tol) {
  return oracle(p, t, tol);
}

TLeib6Params transform_params_oracle(const TLeib6Params& p, const AdaptedTransform& t, double tol) {
  return oracle(p, t, tol);
}

TLeibParams transform_params_oracle(const TLeibParams& p, const AdaptedTransform& t, double tol) {
  return std::visit([&](const auto& q) -> TLeibParams { return oracle(q, t, tol); }, p);
}

TLeib5Params transform_params_closed5(const TLeib5Params& p, const Scalar& a0, const Scalar& a1, const Scalar& b1) {
  require_nonzero(a0 * b1, "A0*B1");
  Scalar a0_cubed = pow_int(a0, 3);
  TLeib5Params out{
      (a0 * a0 * p.b00 + a0 * a1 * p.b01 + a1 * a1 * p.b11) / (a0_cubed * b1),
      (a0 * p.b01 + Scalar(2) * a1 * p.b11) / a0_cubed,
      b1 * p.b11 / a0_cubed,
      b1 * p.b12 / (a0 * a0),
  };
  return unify_params(out);
}

TLeib6Params transform_params_closed6(const TLeib6Params& p, const Scalar& a0, const Scalar& a1, const Scalar& b1,
                                      const Scalar& b2, const Scalar& b3) {
  const Scalar d = a0 + a1 * p.b23;
  require_nonzero(a0 * b1 * d, "A0*B1*(A0 + A1*b23)");
  const Scalar a0_sq = a0 * a0;
  const Scalar a0_cubed = a0_sq * a0;
  const Scalar b1_sq = b1 * b1;
  const Scalar b12_sq = p.b12 * p.b12;
  Scalar b13_num = Scalar(2) * a0 * a1 * b1_sq * b12_sq + a0_sq * b1_sq * p.b13 +
                   (a0_sq * (Scalar(-2) * b1 * b3 + b2 * b2) + a1 * a1 * b1_sq * b12_sq) * p.b23;
  TLeib6Params out{
      (a0_sq * p.b00 + a0 * a1 * p.b01 + a1 * a1 * p.b11) / (a0_cubed * b1 * d),
      (a0 * p.b01 + Scalar(2) * a1 * p.b11) / (a0_cubed * d),
      b1 * p.b11 / (a0_cubed * d),
      b1 * p.b12 / a0_sq,
      b13_num / (a0_sq * a0_sq * b1 * d),
      b1 * p.b23 / d,
  };
  return unify_params(out);
}

TLeibParams transform_params_closed(const TLeibParams& p, const AdaptedTransform& t) {
  check_shape(t, dim_of(p));
  if (const auto* p5 = std::get_if<TLeib5Params>(&p)) return transform_params_closed5(*p5, t.A(0), t.A(1), t.B(1));
  return transform_params_closed6(std::get<TLeib6Params>(p), t.A(0), t.A(1), t.B(1), t.B(2), t.B(3));
}

Scalar random_gaussian_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 18);
  auto part = [&] {
    long d = den(rng) - 10;  // [-9, 9] without zero
    if (d >= 0) ++d;
    return Rational(num(rng), d);
  };
  Rational re = part();
  Rational im = part();
  return Scalar(re, im);
}

AdaptedTransform random_adapted(std::size_t dim, const TLeibParams& p, std::uint64_t seed) {
  Rng rng(seed);
  return random_adapted(dim, p, rng);
}

AdaptedTransform random_adapted(std::size_t dim, const TLeibParams& p, Rng& rng) {
  if (dim != dim_of(p)) throw DimensionMismatch("random_adapted: dim does not match the parameters");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    AdaptedTransform t{zero_vector(dim), zero_vector(dim - 1)};
    for (auto& x : t.a) x = random_gaussian_rational(rng);
    for (auto& x : t.b) x = random_gaussian_rational(rng);
    if (is_applicable(p, t)) return t;
  }
  throw Error("random_adapted: no applicable transform after 1000 draws");
}

AdaptedTransform compose(const TLeibParams& p, const AdaptedTransform& first, const AdaptedTransform& second) {
  const AlgebraTable table = build_tleib(p);
  const TLeibParams mid = transform_params_oracle(p, first);
  Matrix m = multiply(extend_basis(second, build_tleib(mid)), extend_basis(first, table));
  const std::size_t n = table.dim();
  if (!is_zero(m[1][0], kResidualTol)) throw TemplateMismatch("composite moves e_1 off span{e_1..e_n}");
  AdaptedTransform out{m[0], Vector(m[1].begin() + 1, m[1].end())};
  // The composite must again be generated by its first two rows.
  Matrix regenerated = extend_basis(out, table);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!approx_equal(regenerated[i][k], m[i][k], kResidualTol)) {
        throw TemplateMismatch("composite of adapted transforms is not adapted");
      }
    }
  }
  return out;
}

AdaptedTransform inverse(const TLeibParams& p, const AdaptedTransform& t) {
  Matrix m = extend_basis(t, build_tleib(p));
  auto inv = filiform::inverse(m);
  if (!inv) throw SingularTransform("basis matrix is singular");
  const Matrix& mi = *inv;
  if (!is_zero(mi[1][0], kResidualTol)) throw TemplateMismatch("inverse moves e_1 off span{e_1..e_n}");
  AdaptedTransform out{mi[0], Vector(mi[1].begin() + 1, mi[1].end())};
  Matrix regenerated = extend_basis(out, build_tleib(transform_params_oracle(p, t)));
  for (std::size_t i = 0; i < mi.size(); ++i) {
    for (std::size_t k = 0; k < mi.size(); ++k) {
      if (!approx_equal(regenerated[i][k], mi[i][k], kResidualTol)) {
        throw TemplateMismatch("inverse of an adapted transform is not adapted");
      }
    }
  }
  return out;
}

}  // namespace filiform
