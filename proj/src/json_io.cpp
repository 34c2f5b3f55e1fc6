#include "conicap/json_io.hpp"

#include "conicap/error.hpp"

namespace conicap {

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::invalid_input, message); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object())
        bad(std::string("expected an object containing \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing field \"") + key + "\"");
    return *it;
}

Rational optional_field(const json& j, const char* key)
{
    auto it = j.find(key);
    return it == j.end() ? Rational(0) : rational_from_json(*it);
}

} // namespace

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return parse_rational(j.dump());
    bad("expected an exact rational string or integer, got " + j.dump());
}

json rational_to_json(const Rational& q) { return to_string(q); }

QuadExt quadext_from_json(const json& j)
{
    if (j.is_string())
        return parse_quadext(j.get<std::string>());
    return QuadExt(rational_from_json(j));
}

Rational rational_field(const json& j, const char* key) { return rational_from_json(field(j, key)); }

Conic conic_from_json(const json& j)
{
    return Conic::make(rational_field(j, "A"), rational_field(j, "B"), rational_field(j, "C"), rational_field(j, "D"),
                       rational_field(j, "E"), rational_field(j, "F"));
}

json conic_to_json(const Conic& c)
{
    return {{"A", to_string(c.A)}, {"B", to_string(c.B)}, {"C", to_string(c.C)},
            {"D", to_string(c.D)}, {"E", to_string(c.E)}, {"F", to_string(c.F)}};
}

LinFracMap map_from_json(const json& j)
{
    return LinFracMap::make(rational_field(j, "a"), rational_field(j, "b"), rational_field(j, "c"),
                            rational_field(j, "d"), rational_field(j, "e"), rational_field(j, "f"));
}

json map_to_json(const LinFracMap& m)
{
    return {{"a", to_string(m.a)}, {"b", to_string(m.b)}, {"c", to_string(m.c)},
            {"d", to_string(m.d)}, {"e", to_string(m.e)}, {"f", to_string(m.f)}};
}

json proj_point_to_json(const ProjPoint& p)
{
    return json::array({to_string(p.x1), to_string(p.x2), to_string(p.x0)});
}

WeierstrassCurve curve_from_json(const json& j)
{
    if (!j.is_object())
        bad("curve must be an object with keys a1, a2, a3, a4, a6");
    return WeierstrassCurve{optional_field(j, "a1"), optional_field(j, "a2"), optional_field(j, "a3"),
                            optional_field(j, "a4"), optional_field(j, "a6")};
}

json curve_to_json(const WeierstrassCurve& c)
{
    return {{"a1", to_string(c.a1)}, {"a2", to_string(c.a2)}, {"a3", to_string(c.a3)},
            {"a4", to_string(c.a4)}, {"a6", to_string(c.a6)}};
}

CurvePoint curve_point_from_json(const json& j)
{
    if (j.is_object() && j.contains("inf")) {
        if (j["inf"] != true)
            bad("\"inf\" must be true when present");
        return CurvePoint::infinity();
    }
    return {rational_field(j, "X"), rational_field(j, "Y")};
}

json curve_point_to_json(const CurvePoint& p)
{
    if (p.is_infinity())
        return {{"inf", true}};
    return {{"X", to_string(p.x())}, {"Y", to_string(p.y())}};
}

json ap_triple_to_json(const ApTriple& ap)
{
    json points = json::array();
    json ts = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        points.push_back(proj_point_to_json(ap.points[i]));
        ts.push_back(to_string(ap.t_values[i]));
    }
    return {{"delta", to_string(ap.delta)}, {"t", ts}, {"points", points}};
}

json triangle_to_json(const Triangle& t)
{
    return {{"a", to_string(t.a)}, {"b", to_string(t.b)}, {"c", to_string(t.c)}, {"cos_theta", to_string(t.cos_theta)}};
}

json series_to_json(const QSeries& s)
{
    json coeffs = json::array();
    for (const Rational& c : s.coeffs())
        coeffs.push_back(to_string(c));
    return {{"lead", s.lead()}, {"coeffs", coeffs}};
}

} // namespace conicap
