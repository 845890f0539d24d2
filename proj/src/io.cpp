#include "filiform/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(std::string(what) + ": unknown field '" + key + "'");
  }
}

std::size_t index_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<Scalar> scalar_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
  std::vector<Scalar> out;
  for (const auto& x : v) out.push_back(scalar_from_json(x));
  return out;
}

// Reads {"name": scalar} pairs against a fixed key list, defaulting to 0.
std::vector<Scalar> keyed_values(const json& params, const std::vector<std::string>& names, const char* family) {
  if (!params.is_object()) fail("'params' must be an object");
  std::map<std::string, Scalar> found;
  for (const auto& [key, value] : params.items()) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      fail(std::string(family) + ": unknown parameter '" + key + "'");
    }
    found.emplace(key, scalar_from_json(value));
  }
  std::vector<Scalar> out;
  for (const auto& n : names) {
    auto it = found.find(n);
    out.push_back(it == found.end() ? Scalar(0) : it->second);
  }
  return out;
}

std::vector<std::string> indexed_names(const char* stem, int first, int last) {
  std::vector<std::string> out;
  for (int k = first; k <= last; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

template <typename P>
std::vector<std::string> tleib_names() {
  return {P::kNames.begin(), P::kNames.end()};
}

template <typename P>
json tleib_object(const P& p) {
  json out = json::object();
  auto v = p.values();
  for (std::size_t i = 0; i < P::kCount; ++i) out[std::string(P::kNames[i])] = to_json(v[i]);
  return out;
}

template <typename P>
P tleib_params(const json& params) {
  auto v = keyed_values(params, tleib_names<P>(), "TLeib");
  std::array<Scalar, P::kCount> a;
  std::copy(v.begin(), v.end(), a.begin());
  return P::from_values(a);
}

}  // namespace

json to_json(const Scalar& x) {
  if (x.is_exact()) return to_string(x);
  auto z = x.to_complex();
  return json::array({z.real(), z.imag()});
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Scalar::approx(j[0].get<double>(), j[1].get<double>());
  }
  fail("expected a scalar string or [re, im] pair, got " + j.dump());
}

json to_json(const AlgebraTable& t) {
  json entries = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = t.at(i, j, k);
        if (c.is_exact() ? c.is_exact_zero() : c.to_complex() == std::complex<double>(0.0, 0.0)) continue;
        entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", to_json(c)}});
      }
    }
  }
  return {{"dim", n}, {"entries", entries}};
}

AlgebraTable table_from_json(const json& j) {
  reject_unknown(j, {"dim", "entries"}, "table");
  const std::size_t n = index_field(j, "dim");
  if (n == 0) fail("table dim must be positive");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) fail("'entries' must be an array");
  TableBuilder b(n);
  for (const auto& e : entries) {
    reject_unknown(e, {"i", "j", "k", "c"}, "table entry");
    std::size_t i = index_field(e, "i");
    std::size_t jj = index_field(e, "j");
    std::size_t k = index_field(e, "k");
    if (i >= n || jj >= n || k >= n) fail("table entry index out of range: " + e.dump());
    b.add(i, jj, k, scalar_from_json(field(e, "c")));
  }
  return b.build();
}

json to_json(const AdaptedTransform& t) {
  json a = json::array();
  json b = json::array();
  for (const auto& x : t.a) a.push_back(to_json(x));
  for (const auto& x : t.b) b.push_back(to_json(x));
  return {{"A", a}, {"B", b}};
}

AdaptedTransform transform_from_json(const json& j) {
  reject_unknown(j, {"A", "B"}, "transform");
  AdaptedTransform t{scalar_list(j, "A"), scalar_list(j, "B")};
  if (t.a.size() < 4 || t.b.size() + 1 != t.a.size()) {
    fail("transform needs n+1 A and n B coefficients, got " + std::to_string(t.a.size()) + " and " +
         std::to_string(t.b.size()));
  }
  return t;
}

json params_object(const TLeibParams& p) {
  return std::visit([](const auto& q) { return tleib_object(q); }, p);
}

json to_json(const FamilyParams& p) {
  return std::visit(
      [](const auto& q) -> json {
        using P = std::decay_t<decltype(q)>;
        json params = json::object();
        if constexpr (std::is_same_v<P, FLeibParams> || std::is_same_v<P, SLeibParams>) {
          constexpr bool fleib = std::is_same_v<P, FLeibParams>;
          if constexpr (fleib) {
            for (std::size_t i = 0; i < q.alphas.size(); ++i) params["alpha" + std::to_string(i + 3)] = to_json(q.alphas[i]);
            params["theta"] = to_json(q.theta);
          } else {
            for (std::size_t i = 0; i < q.betas.size(); ++i) params["beta" + std::to_string(i + 3)] = to_json(q.betas[i]);
            params["gamma"] = to_json(q.gamma);
          }
          return {{"family", fleib ? "FLeib" : "SLeib"}, {"dim", q.n + 1}, {"params", params}};
        } else {
          return {{"family", "TLeib"}, {"dim", P::kDim}, {"params", tleib_object(q)}};
        }
      },
      p);
}

FamilyParams params_from_json(const json& j) {
  reject_unknown(j, {"family", "dim", "params"}, "parameter file");
  const json& fam = field(j, "family");
  if (!fam.is_string()) fail("'family' must be a string");
  const std::string family = fam.get<std::string>();
  const int dim = int_field(j, "dim");
  const json& params = field(j, "params");

  if (family == "TLeib") {
    if (dim == 5) return tleib_params<TLeib5Params>(params);
    if (dim == 6) return tleib_params<TLeib6Params>(params);
    throw DimensionUnsupported("TLeib is defined here for dims 5 and 6 only, got " + std::to_string(dim));
  }
  if (family == "FLeib" || family == "SLeib") {
    const int n = dim - 1;
    if (n < 3 || n > 9) throw BadDimension(family + ": dim must lie in [4, 10], got " + std::to_string(dim));
    const bool fleib = family == "FLeib";
    auto names = indexed_names(fleib ? "alpha" : "beta", 3, n);
    names.push_back(fleib ? "theta" : "gamma");
    auto v = keyed_values(params, names, family.c_str());
    Scalar last = v.back();
    v.pop_back();
    if (fleib) return FLeibParams{n, v, last};
    return SLeibParams{n, v, last};
  }
  fail("unknown family '" + family + "'");
}

TLeibParams tleib_from_json(const json& j) { return as_tleib(params_from_json(j)); }

AlgebraTable build(const FamilyParams& p) {
  return std::visit(
      [](const auto& q) {
        using P = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<P, FLeibParams>) {
          return build_fleib(q);
        } else if constexpr (std::is_same_v<P, SLeibParams>) {
          return build_sleib(q);
        } else if constexpr (std::is_same_v<P, TLeib5Params>) {
          return build_tleib5(q);
        } else {
          return build_tleib6(q);
        }
      },
      p);
}

FamilyParams to_family(const TLeibParams& p) {
  return std::visit([](const auto& q) -> FamilyParams { return q; }, p);
}

TLeibParams as_tleib(const FamilyParams& p) {
  if (const auto* p5 = std::get_if<TLeib5Params>(&p)) return *p5;
  if (const auto* p6 = std::get_if<TLeib6Params>(&p)) return *p6;
  fail("expected a TLeib parameter file");
}

FamilyParams to_approx(const FamilyParams& p) {
  return std::visit(
      [](auto q) -> FamilyParams {
        using P = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<P, FLeibParams>) {
          for (auto& x : q.alphas) x = x.to_approx();
          q.theta = q.theta.to_approx();
        } else if constexpr (std::is_same_v<P, SLeibParams>) {
          for (auto& x : q.betas) x = x.to_approx();
          q.gamma = q.gamma.to_approx();
        } else {
          auto v = q.values();
          for (auto& x : v) x = x.to_approx();
          q = P::from_values(v);
        }
        return q;
      },
      p);
}

json to_json(const ClassificationResult& r) {
  json invariants = json::object();
  for (const auto& inv : r.invariants) invariants[inv.name] = to_json(inv.value);
  json out = {{"label", r.label.str()},
              {"invariants", invariants},
              {"canonical", r.canonical ? params_object(*r.canonical) : json(nullptr)},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"degenerate", r.degenerate}};
  if (r.degenerate) out["degenerate_reason"] = r.degenerate_reason;
  return out;
}

ClassificationResult classification_from_json(const json& j) {
  reject_unknown(j, {"label", "invariants", "canonical", "witness", "degenerate", "degenerate_reason"},
                 "classification");
  ClassificationResult r;
  const json& label = field(j, "label");
  if (!label.is_string()) fail("'label' must be a string");
  r.label = OrbitLabel::parse(label.get<std::string>());
  const json& invariants = field(j, "invariants");
  if (!invariants.is_object()) fail("'invariants' must be an object");
  for (const auto& [name, value] : invariants.items()) r.invariants.push_back({name, scalar_from_json(value)});
  const json& canonical = field(j, "canonical");
  if (!canonical.is_null()) {
    if (r.label.dim == 5) {
      r.canonical = tleib_params<TLeib5Params>(canonical);
    } else {
      r.canonical = tleib_params<TLeib6Params>(canonical);
    }
  }
  const json& witness = field(j, "witness");
  if (!witness.is_null()) r.witness = transform_from_json(witness);
  const json& degenerate = field(j, "degenerate");
  if (!degenerate.is_boolean()) fail("'degenerate' must be a boolean");
  r.degenerate = degenerate.get<bool>();
  if (auto it = j.find("degenerate_reason"); it != j.end()) {
    if (!it->is_string()) fail("'degenerate_reason' must be a string");
    r.degenerate_reason = it->get<std::string>();
  }
  return r;
}

json to_json(const IsomorphismResult& r) {
  const auto& c = r.certificate;
  return {{"isomorphic", r.isomorphic},
          {"decided", c.decided},
          {"canonical_a", c.canonical_a ? params_object(*c.canonical_a) : json(nullptr)},
          {"canonical_b", c.canonical_b ? params_object(*c.canonical_b) : json(nullptr)},
          {"witness", c.witness ? to_json(*c.witness) : json(nullptr)}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace filiform::io
