#pragma once

#include "conicap/conic.hpp"
#include "conicap/curve.hpp"
#include "conicap/progression.hpp"
#include "conicap/qseries.hpp"

#include "json.hpp"

namespace conicap {

using json = nlohmann::ordered_json;

// Numbers travel as exact strings ("-3/4"); JSON integers are also accepted on input.
// Every reader throws Error{invalid_input} on a missing field or malformed value.

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);
QuadExt quadext_from_json(const json& j);

/// Reads field `key` of object `j`.
Rational rational_field(const json& j, const char* key);

Conic conic_from_json(const json& j); // {"A": .., "F": ..}
json conic_to_json(const Conic& c);
LinFracMap map_from_json(const json& j); // {"a": .., "f": ..}
json map_to_json(const LinFracMap& m);
json proj_point_to_json(const ProjPoint& p); // [x1, x2, x0]

WeierstrassCurve curve_from_json(const json& j); // {"a1", "a2", "a3", "a4", "a6"}, missing keys are 0
json curve_to_json(const WeierstrassCurve& c);
CurvePoint curve_point_from_json(const json& j); // {"X", "Y"} or {"inf": true}
json curve_point_to_json(const CurvePoint& p);

json ap_triple_to_json(const ApTriple& ap);
json triangle_to_json(const Triangle& t);
json series_to_json(const QSeries& s); // {"lead": int, "coeffs": [..]}

} // namespace conicap
