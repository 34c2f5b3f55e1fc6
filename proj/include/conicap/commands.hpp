#pragma once

#include "conicap/json_io.hpp"

#include <string>
#include <vector>

namespace conicap {

/// {"conic", "map", "t0"} -> seed data plus every nontrivial progression found
/// from points of height <= `height`, deduplicated by delta, in search order.
json cmd_find_ap(const json& input, unsigned long height, FiberSign sign = FiberSign::plus);

/// One of {"triangle": {a, b, c}}, {"delta", "point"}, {"delta", "roots": [x1, x2, x3]}
/// or {"delta"} alone (point search up to `height`). Emits all representations.
json cmd_congruent(const json& input, unsigned long height);

/// {"curve", "point"} -> k, k1 and the substitution data.
json cmd_normalize(const json& input);

/// Suites: table1, tower, symmetry, all. The report carries "ok".
json cmd_verify(const std::string& suite, int order);

/// name in {k, r, j, all}.
json cmd_series(const std::string& name, int order);

/// The eight rows of the rational-point table for Y^2 = X^3 + 5X^2 + 4X, as printed.
struct Table1Row {
    std::array<Rational, 4> x;
    CurvePoint point;
};
const std::vector<Table1Row>& table1_rows();

} // namespace conicap
