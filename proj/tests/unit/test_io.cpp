#include <doctest.h>

#include "filiform/errors.hpp"
#include "filiform/io.hpp"
#include "support.hpp"

using namespace filiform;
using namespace filiform::testing;
using io::json;

TEST_CASE("scalar json") {
  CHECK(io::to_json(Scalar(Rational(-3, 2), Rational(1, 4))) == json("-3/2+1/4i"));
  CHECK(io::to_json(Scalar::approx(1.5, -2.0)) == json::array({1.5, -2.0}));
  CHECK(io::scalar_from_json(json("2/4")) == Scalar::ratio(1, 2));
  CHECK(io::scalar_from_json(json(3)) == Scalar(3));
  CHECK(io::scalar_from_json(json::array({0.25, 1.0})) == Scalar::approx(0.25, 1.0));
  CHECK_THROWS_AS(io::scalar_from_json(json(1.5)), ParseError);
  CHECK_THROWS_AS(io::scalar_from_json(json::array({1.0})), ParseError);
}

TEST_CASE("tables round-trip") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraTable t = build_tleib(random_params(trial % 2 ? 5 : 6, rng, 0.3));
    json j = io::to_json(t);
    CHECK(io::table_from_json(io::parse(j.dump())) == t);
    for (const auto& e : j["entries"]) CHECK(e["c"] != json("0"));
  }
  AlgebraTable approx = build_tleib5({1, 2, 3, 4}).to_approx();
  CHECK(io::table_from_json(io::parse(io::to_json(approx).dump())) == approx);
  CHECK_THROWS_AS(io::table_from_json(io::parse(R"({"dim":2,"entries":[{"i":0,"j":0,"k":2,"c":"1"}]})")), ParseError);
  CHECK_THROWS_AS(io::table_from_json(io::parse(R"({"dim":2,"entries":[],"extra":1})")), ParseError);
}

TEST_CASE("parameter files") {
  auto p = io::params_from_json(io::parse(R"({"family":"TLeib","dim":5,"params":{"b00":"1","b12":"-1/2i"}})"));
  CHECK(std::get<TLeib5Params>(p) == TLeib5Params{1, 0, 0, Scalar(Rational(0), Rational(-1, 2))});
  CHECK_THROWS_AS(io::params_from_json(io::parse(R"({"family":"TLeib","dim":5,"params":{"b13":"1"}})")), ParseError);
  CHECK_THROWS_AS(io::params_from_json(io::parse(R"({"family":"TLeib","dim":5,"params":{},"x":1})")), ParseError);
  CHECK_THROWS_AS(io::params_from_json(io::parse(R"({"family":"TLeib","dim":7,"params":{}})")), DimensionUnsupported);
  CHECK_THROWS_AS(io::params_from_json(io::parse(R"({"family":"Other","dim":5,"params":{}})")), ParseError);
  CHECK_THROWS_AS(io::params_from_json(io::parse(R"({"family":"FLeib","dim":12,"params":{}})")), BadDimension);
  CHECK_THROWS_AS(io::parse("{not json"), ParseError);

  auto f = io::params_from_json(io::parse(R"({"family":"FLeib","dim":5,"params":{"alpha3":"1","theta":"2"}})"));
  const auto& fl = std::get<FLeibParams>(f);
  CHECK(fl.n == 4);
  CHECK(fl.alphas == std::vector<Scalar>{1, 0});
  CHECK(fl.theta == Scalar(2));
  CHECK(io::build(f) == build_fleib(fl));

  for (const io::FamilyParams& q :
       {io::FamilyParams{FLeibParams{5, {1, Scalar::ratio(1, 3), 0}, 2}}, io::FamilyParams{SLeibParams{4, {1, 2}, 7}},
        io::FamilyParams{TLeib6Params{1, 2, 3, 4, 5, 6}}}) {
    json j = io::to_json(q);
    CHECK(io::to_json(io::params_from_json(io::parse(j.dump()))) == j);
  }
}

TEST_CASE("transforms and results round-trip") {
  for (int dim : {5, 6}) {
    for (auto label : all_labels(dim)) {
      CAPTURE(label.str());
      TLeibParams p = sample_orbit_member(label, 4);
      ClassificationResult r = classify(p);
      json j = io::to_json(r);
      ClassificationResult back = io::classification_from_json(io::parse(j.dump()));
      CHECK(io::to_json(back) == j);
      CHECK(back.label == r.label);
      CHECK(back.invariants == r.invariants);
      CHECK(back.canonical == r.canonical);
      CHECK(back.witness == r.witness);
      CHECK(io::transform_from_json(io::to_json(*r.witness)) == *r.witness);
    }
  }
  ClassificationResult degenerate = classify(TLeib6Params{3, 2, 1, 5, 7, 1});
  json j = io::to_json(degenerate);
  CHECK(j["canonical"].is_null());
  CHECK(j["witness"].is_null());
  CHECK(j["degenerate"] == true);
  CHECK(io::to_json(io::classification_from_json(j)) == j);
  CHECK_THROWS_AS(io::transform_from_json(io::parse(R"({"A":["1","0","0","0","0"],"B":["1"]})")), ParseError);
}

TEST_CASE("isomorphism json") {
  json j = io::to_json(isomorphic(TLeib5Params{1, 0, 1, 0}, TLeib5Params{0, 0, 1, 0}));
  CHECK(j["isomorphic"] == false);
  CHECK(j["decided"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j["canonical_b"]["b11"] == json("1"));
}
