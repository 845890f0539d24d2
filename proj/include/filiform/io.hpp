#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "filiform/classify.hpp"

namespace filiform::io {

using nlohmann::json;

/// Exact scalars become strings ("-3/2+1/4i"), Approx scalars [re, im].
json to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);

/// {"dim": n, "entries": [{"i", "j", "k", "c"}]}, nonzero entries only.
json to_json(const AlgebraTable& t);
AlgebraTable table_from_json(const json& j);

/// {"A": [...], "B": [...]}.
json to_json(const AdaptedTransform& t);
AdaptedTransform transform_from_json(const json& j);

/// Contents of a parameter file.
using FamilyParams = std::variant<FLeibParams, SLeibParams, TLeib5Params, TLeib6Params>;

/// {"family": ..., "dim": ..., "params": {...}}. Parameters missing from
/// "params" default to 0; unknown keys are rejected with ParseError.
json to_json(const FamilyParams& p);
FamilyParams params_from_json(const json& j);
/// Only the "params" object of a TLeib tuple, keyed b00..b23.
json params_object(const TLeibParams& p);
TLeibParams tleib_from_json(const json& j);

AlgebraTable build(const FamilyParams& p);
FamilyParams to_family(const TLeibParams& p);
/// Throws ParseError unless p is a TLeib tuple.
TLeibParams as_tleib(const FamilyParams& p);
/// Converts every scalar to Approx.
FamilyParams to_approx(const FamilyParams& p);

json to_json(const ClassificationResult& r);
ClassificationResult classification_from_json(const json& j);

json to_json(const IsomorphismResult& r);

/// Parses text as JSON, turning syntax errors into ParseError.
json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace filiform::io
