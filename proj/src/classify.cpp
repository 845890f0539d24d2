#include "filiform/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>

#include "filiform/errors.hpp"

namespace filiform {
namespace {

template <typename P>
double max_magnitude(const P& p) {
  double m = 0.0;
  for (const auto& v : p.values()) m = std::max(m, v.abs());
  return m;
}

// Zero test for subset membership: exact in Exact mode, relative to the
// largest parameter in Approx mode.
class ZeroTest {
 public:
  template <typename P>
  ZeroTest(const P& p, double tol) : tol_(tol), scale_(params_exact(p) ? 0.0 : max_magnitude(p)) {}
  bool operator()(const Scalar& x) const { return is_zero(x, tol_, scale_); }

 private:
  double tol_;
  double scale_;
};

template <typename P>
P tuple_of(std::initializer_list<Scalar> values) {
  std::array<Scalar, P::kCount> v;
  std::copy(values.begin(), values.end(), v.begin());
  return unify_params(P::from_values(v));
}

struct Generators {
  Scalar a0, a1, b1, b2, b3;
};

// A witness recipe: A0 is a root of `radicand` of the given degree, the other
// generators follow from A0.
struct Recipe {
  Scalar radicand;
  int degree = 1;
  std::function<Generators(const Scalar&)> complete;
};

template <typename P>
P apply_closed(const P& p, const Generators& g) {
  if constexpr (std::is_same_v<P, TLeib5Params>) {
    return transform_params_closed5(p, g.a0, g.a1, g.b1);
  } else {
    return transform_params_closed6(p, g.a0, g.a1, g.b1, g.b2, g.b3);
  }
}

template <typename P>
double tuple_residual(const P& got, const P& want) {
  double worst = 0.0;
  auto g = got.values();
  auto w = want.values();
  for (std::size_t i = 0; i < P::kCount; ++i) {
    worst = std::max(worst, (g[i] - w[i]).abs() / std::max(1.0, w[i].abs()));
  }
  return worst;
}

// Runs the recipe over every root branch and keeps the witness whose image
// matches the canonical tuple; an exact match wins outright.
template <typename P>
AdaptedTransform choose_witness(const P& p, const Recipe& recipe, const P& canonical) {
  std::optional<Generators> best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < recipe.degree; ++k) {
    Scalar a0 = recipe.degree == 1 ? recipe.radicand : nth_root(recipe.radicand, recipe.degree, k);
    Generators g = recipe.complete(a0);
    P image = apply_closed(p, g);
    if (params_exact(image) && params_exact(canonical) && image == canonical) {
      best = g;
      break;
    }
    double r = tuple_residual(image, canonical);
    if (r < best_residual) {
      best_residual = r;
      best = g;
    }
  }
  return AdaptedTransform::from_generators(P::kDim, best->a0, best->a1, best->b1, best->b2, best->b3);
}

Recipe fixed(Generators g) {
  return Recipe{g.a0, 1, [g](const Scalar&) { return g; }};
}

Recipe identity_recipe() { return fixed({1, 0, 1, 0, 0}); }

// B3 that clears b13' when b23 != 0 (B2 = 0).
Scalar clearing_b3(const TLeib6Params& p, const Scalar& a0, const Scalar& a1, const Scalar& b1) {
  Scalar b12_sq = p.b12 * p.b12;
  return b1 * (Scalar(2) * a0 * a1 * b12_sq + a0 * a0 * p.b13 + a1 * a1 * b12_sq * p.b23) /
         (Scalar(2) * a0 * a0 * p.b23);
}

// Completes a dim-6 recipe with b23 != 0: B1 = (A0 + A1*b23)/b23, B3 clears b13.
Generators with_b23(const TLeib6Params& p, const Scalar& a0, const Scalar& a1) {
  Scalar b1 = (a0 + a1 * p.b23) / p.b23;
  return {a0, a1, b1, 0, clearing_b3(p, a0, a1, b1)};
}

void require_lambdas(const OrbitLabel& label, const std::vector<Scalar>& lambdas) {
  if (lambdas.size() != label.invariant_count()) {
    throw Error(label.str() + " takes " + std::to_string(label.invariant_count()) + " parameter(s), got " +
                std::to_string(lambdas.size()));
  }
}

const Scalar& invariant(const std::vector<NamedScalar>& invs, std::string_view name) {
  for (const auto& inv : invs) {
    if (inv.name == name) return inv.value;
  }
  throw Error("missing invariant " + std::string(name));
}

}  // namespace

std::string OrbitLabel::str() const { return "U" + std::to_string(dim) + "_" + std::to_string(index); }

OrbitLabel OrbitLabel::parse(std::string_view text) {
  int dim = 0;
  int index = 0;
  char tail = 0;
  std::string s(text);
  if (std::sscanf(s.c_str(), "U%d_%d%c", &dim, &index, &tail) != 2) throw UnknownLabel("unknown label '" + s + "'");
  if (!((dim == 5 && index >= 1 && index <= 9) || (dim == 6 && index >= 1 && index <= 19))) {
    throw UnknownLabel("unknown label '" + s + "'");
  }
  return {dim, index};
}

bool OrbitLabel::parametric() const { return invariant_count() > 0; }

std::size_t OrbitLabel::invariant_count() const {
  if (dim == 5) return index == 1 ? 1 : 0;
  switch (index) {
    case 1:
    case 7: return 2;
    case 2:
    case 8:
    case 11: return 1;
    default: return 0;
  }
}

std::vector<OrbitLabel> all_labels(int dim) {
  if (dim != 5 && dim != 6) throw DimensionUnsupported("TLeib is classified in dims 5 and 6 only");
  std::vector<OrbitLabel> out;
  for (int i = 1; i <= (dim == 5 ? 9 : 19); ++i) out.push_back({dim, i});
  return out;
}

Scalar delta(const TLeib5Params& p) { return Scalar(4) * p.b00 * p.b11 - p.b01 * p.b01; }
Scalar delta(const TLeib6Params& p) { return Scalar(4) * p.b00 * p.b11 - p.b01 * p.b01; }

OrbitLabel subset5(const TLeib5Params& p, double zero_tol) {
  const ZeroTest zero(p, zero_tol);
  auto label = [](int i) { return OrbitLabel{5, i}; };
  if (!zero(p.b11)) {
    if (!zero(p.b12)) return label(1);
    return zero(delta(p)) ? label(3) : label(2);
  }
  if (!zero(p.b01)) return zero(p.b12) ? label(5) : label(4);
  if (!zero(p.b00)) return zero(p.b12) ? label(7) : label(6);
  return zero(p.b12) ? label(9) : label(8);
}

OrbitLabel subset6(const TLeib6Params& p, double zero_tol) {
  const ZeroTest zero(p, zero_tol);
  auto label = [](int i) { return OrbitLabel{6, i}; };
  if (!zero(p.b23)) {
    if (!zero(p.b11)) return label(1);
    if (!zero(p.b01)) return label(2);
    if (!zero(p.b12)) return zero(p.b00) ? label(4) : label(3);
    return zero(p.b00) ? label(6) : label(5);
  }
  if (!zero(p.b12)) {
    if (!zero(p.b11)) return label(7);
    if (!zero(p.b01)) return label(8);
    return zero(p.b00) ? label(10) : label(9);
  }
  if (!zero(p.b11)) {
    if (!zero(p.b13)) return label(11);
    return zero(delta(p)) ? label(13) : label(12);
  }
  if (!zero(p.b01)) return zero(p.b13) ? label(15) : label(14);
  if (!zero(p.b00)) return zero(p.b13) ? label(17) : label(16);
  return zero(p.b13) ? label(19) : label(18);
}

OrbitLabel subset(const TLeibParams& p, double zero_tol) {
  return std::visit(
      [&](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, TLeib5Params>) {
          return subset5(q, zero_tol);
        } else {
          return subset6(q, zero_tol);
        }
      },
      p);
}

std::vector<NamedScalar> invariants5(const TLeib5Params& p, double zero_tol) {
  if (subset5(p, zero_tol).index != 1) return {};
  return {{"I1", pow_int(p.b12 / p.b11, 4) * delta(p)}};
}

std::vector<NamedScalar> invariants6(const TLeib6Params& p, double zero_tol) {
  const ZeroTest zero(p, zero_tol);
  switch (subset6(p, zero_tol).index) {
    case 1: {
      Scalar s = Scalar(2) * p.b11 - p.b01 * p.b23;
      Scalar i2 = pow_int(s, 3) * pow_int(p.b12, 3) / (p.b23 * p.b23 * pow_int(p.b11, 4));
      if (zero(s)) return {{"I2", i2}};
      return {{"I1", pow_int(p.b23 / s, 2) * delta(p)}, {"I2", i2}};
    }
    case 2: {
      Scalar t = p.b01 - p.b23 * p.b00;
      return {{"I1", pow_int(t, 4) * pow_int(p.b12, 3) / (pow_int(p.b23, 3) * pow_int(p.b01, 5))}};
    }
    case 7: {
      Scalar b12_sq = p.b12 * p.b12;
      Scalar i1 = (Scalar(4) * p.b00 * b12_sq * b12_sq - Scalar(2) * p.b13 * p.b01 * b12_sq + p.b13 * p.b13 * p.b11) /
                  (p.b12 * p.b11 * p.b11);
      Scalar i2 = pow_int(p.b01 * b12_sq - p.b13 * p.b11, 2) / (p.b12 * pow_int(p.b11, 3));
      return {{"I1", i1}, {"I2", i2}};
    }
    case 8:
      return {{"I1", pow_int(Scalar(2) * p.b00 * p.b12 * p.b12 - p.b13 * p.b01, 3) /
                         (pow_int(p.b12, 3) * pow_int(p.b01, 4))}};
    case 11: return {{"I1", pow_int(p.b13 / p.b11, 6) * delta(p)}};
    default: return {};
  }
}

std::optional<std::string> degenerate_reason(const TLeib6Params& p, double zero_tol) {
  const ZeroTest zero(p, zero_tol);
  switch (subset6(p, zero_tol).index) {
    case 1:
      if (zero(Scalar(2) * p.b11 - p.b01 * p.b23)) return "U6_1 with 2*b11 - b01*b23 = 0";
      return std::nullopt;
    case 2:
      if (zero(p.b01 - p.b23 * p.b00)) return "U6_2 with b01 - b23*b00 = 0";
      return std::nullopt;
    default: return std::nullopt;
  }
}

Canonical<TLeib5Params> canonical5(const TLeib5Params& input, const ClassifyOptions& opts) {
  const TLeib5Params p = unify_params(input);
  using P = TLeib5Params;
  const Scalar& b00 = p.b00;
  const Scalar& b01 = p.b01;
  const Scalar& b11 = p.b11;
  const Scalar& b12 = p.b12;
  const Scalar two(2);

  P canon;
  Recipe recipe;
  switch (subset5(p, opts.zero_tol).index) {
    case 1:
      canon = tuple_of<P>({invariant(invariants5(p, opts.zero_tol), "I1") / Scalar(4), 0, 1, 1});
      recipe = fixed({b11 / b12, -b01 / (two * b12), b11 * b11 / pow_int(b12, 3), 0, 0});
      break;
    case 2:
      canon = tuple_of<P>({1, 0, 1, 0});
      recipe = {delta(p) / Scalar(4), 4, [&](const Scalar& a0) {
                  return Generators{a0, -a0 * b01 / (two * b11), pow_int(a0, 3) / b11, 0, 0};
                }};
      break;
    case 3:
      canon = tuple_of<P>({0, 0, 1, 0});
      recipe = fixed({1, -b01 / (two * b11), Scalar(1) / b11, 0, 0});
      break;
    case 4:
      canon = tuple_of<P>({0, 1, 0, 1});
      recipe = {b01, 2, [&](const Scalar& a0) { return Generators{a0, -a0 * b00 / b01, b01 / b12, 0, 0}; }};
      break;
    case 5:
      canon = tuple_of<P>({0, 1, 0, 0});
      recipe = {b01, 2, [&](const Scalar& a0) { return Generators{a0, -a0 * b00 / b01, 1, 0, 0}; }};
      break;
    case 6:
      canon = tuple_of<P>({1, 0, 0, 1});
      recipe = {b00 * b12, 3, [&](const Scalar& a0) { return Generators{a0, 0, b00 / a0, 0, 0}; }};
      break;
    case 7:
      canon = tuple_of<P>({1, 0, 0, 0});
      recipe = fixed({1, 0, b00, 0, 0});
      break;
    case 8:
      canon = tuple_of<P>({0, 0, 0, 1});
      recipe = fixed({1, 0, Scalar(1) / b12, 0, 0});
      break;
    default:
      canon = tuple_of<P>({0, 0, 0, 0});
      recipe = identity_recipe();
      break;
  }
  return {canon, choose_witness(p, recipe, canon)};
}

namespace {

// Canonical form of a non-degenerate unified tuple with its label and invariants.
Canonical<TLeib6Params> canonical6_known(const TLeib6Params& p, const OrbitLabel& label,
                                         const std::vector<NamedScalar>& invs) {
  using P = TLeib6Params;
  const Scalar& b00 = p.b00;
  const Scalar& b01 = p.b01;
  const Scalar& b11 = p.b11;
  const Scalar& b12 = p.b12;
  const Scalar& b13 = p.b13;
  const Scalar& b23 = p.b23;
  const Scalar two(2);

  // b23 = 0 recipes: B1 is fixed by the target, A1 clears b13 against b12.
  auto clear_b13_a1 = [&](const Scalar& a0) { return -a0 * b13 / (two * b12 * b12); };

  P canon;
  Recipe recipe;
  switch (label.index) {
    case 1: {
      Scalar lambda2 = nth_root(invariant(invs, "I2") / Scalar(8), 3, 0);
      canon = tuple_of<P>({invariant(invs, "I1"), 0, 1, lambda2, 0, 1});
      recipe = {b11 / b23, 3, [&](const Scalar& a0) { return with_b23(p, a0, -a0 * b01 / (two * b11)); }};
      break;
    }
    case 2: {
      Scalar t = b01 - b23 * b00;
      canon = tuple_of<P>({0, 1, 0, nth_root(invariant(invs, "I1"), 3, 0), 0, 1});
      recipe = {b01 * b01 / t, 3, [&](const Scalar& a0) { return with_b23(p, a0, -a0 * b00 / b01); }};
      break;
    }
    case 3:
      canon = tuple_of<P>({1, 0, 0, 1, 0, 1});
      recipe = {b00 * b12 * b12 / b23, 5, [&](const Scalar& a0) {
                  Scalar d = a0 * a0 * b23 / b12;
                  return with_b23(p, a0, (d - a0) / b23);
                }};
      break;
    case 4:
      canon = tuple_of<P>({0, 0, 0, 1, 0, 1});
      recipe = {b12 / b23, 1, [&](const Scalar& a0) { return with_b23(p, a0, 0); }};
      break;
    case 5:
      canon = tuple_of<P>({1, 0, 0, 0, 0, 1});
      // A0 + A1*b23 = 1 keeps the recipe rational.
      recipe = {b00 * b23, 1, [&](const Scalar& a0) { return with_b23(p, a0, (Scalar(1) - a0) / b23); }};
      break;
    case 6:
      canon = tuple_of<P>({0, 0, 0, 0, 0, 1});
      recipe = {1, 1, [&](const Scalar& a0) { return with_b23(p, a0, 0); }};
      break;
    case 7:
      canon = tuple_of<P>({invariant(invs, "I1") / Scalar(4), nth_root(invariant(invs, "I2"), 2, 0), 1, 1, 0, 0});
      recipe = {b11 / b12, 2, [&](const Scalar& a0) {
                  return Generators{a0, clear_b13_a1(a0), b11 / (b12 * b12), 0, 0};
                }};
      break;
    case 8:
      canon = tuple_of<P>({nth_root(invariant(invs, "I1") / Scalar(8), 3, 0), 1, 0, 1, 0, 0});
      recipe = {b01, 3, [&](const Scalar& a0) { return Generators{a0, clear_b13_a1(a0), a0 * a0 / b12, 0, 0}; }};
      break;
    case 9:
      canon = tuple_of<P>({1, 0, 0, 1, 0, 0});
      recipe = {b00 * b12, 4, [&](const Scalar& a0) { return Generators{a0, clear_b13_a1(a0), a0 * a0 / b12, 0, 0}; }};
      break;
    case 10:
      canon = tuple_of<P>({0, 0, 0, 1, 0, 0});
      recipe = fixed({1, clear_b13_a1(Scalar(1)), Scalar(1) / b12, 0, 0});
      break;
    case 11:
      canon = tuple_of<P>({invariant(invs, "I1") / Scalar(4), 0, 1, 0, 1, 0});
      recipe = {b11 / b13, 1, [&](const Scalar& a0) {
                  return Generators{a0, -a0 * b01 / (two * b11), pow_int(a0, 4) / b11, 0, 0};
                }};
      break;
    case 12:
      canon = tuple_of<P>({1, 0, 1, 0, 0, 0});
      recipe = {delta(p) / Scalar(4), 6, [&](const Scalar& a0) {
                  return Generators{a0, -a0 * b01 / (two * b11), pow_int(a0, 4) / b11, 0, 0};
                }};
      break;
    case 13:
      canon = tuple_of<P>({0, 0, 1, 0, 0, 0});
      recipe = fixed({1, -b01 / (two * b11), Scalar(1) / b11, 0, 0});
      break;
    case 14:
      canon = tuple_of<P>({0, 1, 0, 0, 1, 0});
      recipe = {b01, 3, [&](const Scalar& a0) { return Generators{a0, -a0 * b00 / b01, b01 / b13, 0, 0}; }};
      break;
    case 15:
      canon = tuple_of<P>({0, 1, 0, 0, 0, 0});
      recipe = {b01, 3, [&](const Scalar& a0) { return Generators{a0, -a0 * b00 / b01, 1, 0, 0}; }};
      break;
    case 16:
      canon = tuple_of<P>({1, 0, 0, 0, 1, 0});
      recipe = {b00 * b13, 5, [&](const Scalar& a0) { return Generators{a0, 0, pow_int(a0, 3) / b13, 0, 0}; }};
      break;
    case 17:
      canon = tuple_of<P>({1, 0, 0, 0, 0, 0});
      recipe = fixed({1, 0, b00, 0, 0});
      break;
    case 18:
      canon = tuple_of<P>({0, 0, 0, 0, 1, 0});
      recipe = fixed({1, 0, Scalar(1) / b13, 0, 0});
      break;
    default:
      canon = tuple_of<P>({0, 0, 0, 0, 0, 0});
      recipe = identity_recipe();
      break;
  }
  return {canon, choose_witness(p, recipe, canon)};
}

}  // namespace

Canonical<TLeib6Params> canonical6(const TLeib6Params& input, const ClassifyOptions& opts) {
  const TLeib6Params p = unify_params(input);
  if (auto reason = degenerate_reason(p, opts.zero_tol)) {
    throw DegenerateStratum(*reason + ": outside the parameterization of the representative family");
  }
  return canonical6_known(p, subset6(p, opts.zero_tol), invariants6(p, opts.zero_tol));
}

ClassificationResult classify(const TLeibParams& p, const ClassifyOptions& opts) {
  ClassificationResult r;
  r.label = subset(p, opts.zero_tol);
  if (const auto* p5 = std::get_if<TLeib5Params>(&p)) {
    r.invariants = invariants5(unify_params(*p5), opts.zero_tol);
    auto c = canonical5(*p5, opts);
    r.canonical = c.params;
    r.witness = c.witness;
    return r;
  }
  const auto p6 = unify_params(std::get<TLeib6Params>(p));
  r.invariants = invariants6(p6, opts.zero_tol);
  if (auto reason = degenerate_reason(p6, opts.zero_tol)) {
    r.degenerate = true;
    r.degenerate_reason = *reason;
    return r;
  }
  auto c = canonical6_known(p6, r.label, r.invariants);
  r.canonical = c.params;
  r.witness = c.witness;
  return r;
}

IsomorphismResult isomorphic(const TLeibParams& a, const TLeibParams& b, const ClassifyOptions& opts) {
  if (dim_of(a) != dim_of(b)) throw DimensionMismatch("isomorphic: parameter tuples of different dimensions");
  const ClassificationResult ra = classify(a, opts);
  const ClassificationResult rb = classify(b, opts);

  IsomorphismResult out;
  out.certificate.canonical_a = ra.canonical;
  out.certificate.canonical_b = rb.canonical;
  out.certificate.decided = !ra.degenerate && !rb.degenerate;

  bool same = ra.label == rb.label && ra.degenerate == rb.degenerate && ra.invariants.size() == rb.invariants.size();
  for (std::size_t i = 0; same && i < ra.invariants.size(); ++i) {
    same = ra.invariants[i].name == rb.invariants[i].name &&
           approx_equal(ra.invariants[i].value, rb.invariants[i].value, opts.residual_tol);
  }
  out.isomorphic = same;
  if (same && ra.witness && rb.witness) {
    // a --witness_a--> canonical <--witness_b-- b
    AdaptedTransform back = inverse(b, *rb.witness);
    out.certificate.witness = compose(a, *ra.witness, back);
  }
  return out;
}

TLeibParams representative(const OrbitLabel& label, const std::vector<Scalar>& lambdas) {
  require_lambdas(label, lambdas);
  const auto& l = lambdas;
  if (label.dim == 5) {
    static const std::vector<std::vector<Scalar>> fixed5 = {
        {}, {1, 0, 1, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
    if (label.index == 1) return tuple_of<TLeib5Params>({l[0], 0, 1, 1});
    return tleib_from_values(fixed5.at(static_cast<std::size_t>(label.index - 1)));
  }
  switch (label.index) {
    case 1: return tuple_of<TLeib6Params>({l[0], 0, 1, l[1], 0, 1});
    case 2: return tuple_of<TLeib6Params>({0, 1, 0, l[0], 0, 1});
    case 7: return tuple_of<TLeib6Params>({l[0], l[1], 1, 1, 0, 0});
    case 8: return tuple_of<TLeib6Params>({l[0], 1, 0, 1, 0, 0});
    case 11: return tuple_of<TLeib6Params>({l[0], 0, 1, 0, 1, 0});
    default: break;
  }
  static const std::vector<std::vector<Scalar>> fixed6 = {
      {},                 {},                 {1, 0, 0, 1, 0, 1}, {0, 0, 0, 1, 0, 1}, {1, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 1}, {},                 {},                 {1, 0, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 0},
      {},                 {1, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0},
      {1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0}};
  return tleib_from_values(fixed6.at(static_cast<std::size_t>(label.index - 1)));
}

TLeibParams realize_invariants(const OrbitLabel& label, const std::vector<Scalar>& targets) {
  if (!label.parametric()) throw Error(label.str() + " is a single orbit without invariants");
  require_lambdas(label, targets);
  const auto& t = targets;
  using P6 = TLeib6Params;
  if (label.dim == 5) return tuple_of<TLeib5Params>({t[0] / Scalar(4), 0, 1, 1});
  switch (label.index) {
    case 1:
      if (t[1].is_exact_zero()) return tuple_of<P6>({t[0], 0, 1, 0, 0, 1});
      return tuple_of<P6>({t[0] / (Scalar(64) * t[1] * t[1]), 0, 1, Scalar(2) * t[1], 0, Scalar(8) * t[1]});
    case 2:
      if (t[0].is_exact_zero()) return tuple_of<P6>({0, 1, 0, 0, 0, 1});
      return tuple_of<P6>({0, Scalar(1) / t[0], 0, 1, 0, 1});
    case 7:
      if (t[1].is_exact_zero()) return tuple_of<P6>({t[0] / Scalar(4), 0, 1, 1, 0, 0});
      return tuple_of<P6>({t[0] / (Scalar(4) * pow_int(t[1], 3)), Scalar(1) / t[1], 1, t[1], 0, 0});
    case 8:
      if (t[0].is_exact_zero()) return tuple_of<P6>({0, 1, 0, 1, 0, 0});
      return tuple_of<P6>({Scalar(8) * pow_int(t[0], 3), Scalar(8) * t[0] * t[0], 0, 1, 0, 0});
    default:
      return tuple_of<P6>({t[0] / Scalar(4), 0, 1, 0, 1, 0});
  }
}

TLeibParams sample_orbit_member(const OrbitLabel& label, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Scalar> lambdas;
  for (std::size_t i = 0; i < label.invariant_count(); ++i) lambdas.push_back(random_gaussian_rational(rng));
  TLeibParams rep = representative(label, lambdas);
  AdaptedTransform t = random_adapted(static_cast<std::size_t>(label.dim), rep, rng);
  return transform_params_oracle(rep, t);
}

double residual(const TLeibParams& a, const TLeibParams& b) {
  if (dim_of(a) != dim_of(b)) throw DimensionMismatch("residual: tuples of different dimensions");
  auto x = values_of(a);
  auto y = values_of(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, (x[i] - y[i]).abs() / std::max(1.0, y[i].abs()));
  return worst;
}

}  // namespace filiform
