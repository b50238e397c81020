#pragma once

// JSON encodings of the torolog types. Integers are written as JSON numbers
// when they fit in 64 bits and as decimal strings otherwise; both forms are
// accepted on input. Matrices are always written with string entries.
// Malformed input throws Error(InvalidInput).

#include <nlohmann/json.hpp>

#include "torolog/fan.hpp"
#include "torolog/log_structure.hpp"
#include "torolog/morphism.hpp"
#include "torolog/rounding.hpp"
#include "torolog/snc.hpp"

namespace torolog::json {

using Json = nlohmann::ordered_json;

Integer to_integer(const Json& j);
IntVector to_vector(const Json& j);
/// A list of rows.
IntMatrix to_matrix(const Json& j);

RationalCone cone_from_json(const Json& j);
ToricMonoid monoid_from_json(const Json& j);
Fan fan_from_json(const Json& j);
FanOfMonoids fanmon_from_json(const Json& j);
ToricMorphismData morphism_from_json(const Json& j);
/// Face, radial_log and angle on the given monoid.
RoundingPoint rounding_point_from_json(const Json& j, const ToricMonoid& g);
DualComplex complex_from_json(const Json& j, bool complete);
std::vector<Integer> multiplicities_from_json(const Json& j);

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const AbelianGroupInvariants& inv);
Json to_json(const RationalCone& c);
Json to_json(const ToricMonoid& g);
Json to_json(const MonoidFace& f);
Json to_json(const GhostReport& g);
Json to_json(const Fan& f);
Json to_json(const FanOfMonoids& f);
Json to_json(const FanReport& r);
Json to_json(const MorphismReport& r);
Json to_json(const ToricMorphismData& d);
Json to_json(const RoundingPoint& p);
Json to_json(const FiberReport& f);
Json to_json(const DualComplex& dc);
Json to_json(const StratumRow& row);

}  // namespace torolog::json
