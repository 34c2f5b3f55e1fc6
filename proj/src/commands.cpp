#include "conicap/commands.hpp"

#include "conicap/error.hpp"

#include <algorithm>
#include <set>

namespace conicap {

namespace {

bool trivial_orbit(const CurvePoint& p) { return p.is_infinity() || p.x() == 0 || p.y() == 0; }

json disc_to_json(const QuadPoly& d)
{
    return {{"c0", to_string(d.c0)}, {"c1", to_string(d.c1)}, {"c2", to_string(d.c2)}};
}

json roots_json(const std::array<Rational, 3>& roots, bool squared)
{
    json out = json::array();
    for (const Rational& r : roots)
        out.push_back(to_string(squared ? Rational(r * r) : r));
    return out;
}

} // namespace

json cmd_find_ap(const json& input, unsigned long height, FiberSign sign)
{
    Conic conic = conic_from_json(input.at("conic"));
    LinFracMap map = map_from_json(input.at("map"));
    Rational t0 = rational_field(input, "t0");
    ProgressionSeed seed = make_seed(conic, map, t0);

    std::vector<std::pair<CurvePoint, std::optional<Rational>>> candidates;
    if (seed.is_singular()) {
        for (const Rational& t : rationals_up_to_height(height)) {
            if (t != -1)
                candidates.emplace_back(singular_param(t), t);
        }
    } else {
        for (const CurvePoint& p : search_points(seed.cubic(), height))
            candidates.emplace_back(p, std::nullopt);
    }

    json progressions = json::array();
    std::set<Rational> seen;
    std::size_t skipped = 0;
    for (const auto& [p, param] : candidates) {
        if (trivial_orbit(p))
            continue;
        ApTriple ap;
        try {
            ap = three_term_ap(seed, p, sign);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::disc_not_square || e.code() == ErrorCode::not_on_curve)
                throw;
            ++skipped;
            continue;
        }
        if (!seen.insert(ap.delta).second)
            continue;
        json entry = ap_triple_to_json(ap);
        entry["source"] = curve_point_to_json(p);
        if (param)
            entry["param"] = to_string(*param);
        progressions.push_back(std::move(entry));
    }

    json out;
    out["k"] = to_string(seed.k);
    out["t0"] = to_string(seed.t0);
    out["sqrt_disc_t0"] = to_string(seed.sqrt_disc_t0);
    out["disc"] = disc_to_json(seed.disc);
    out["singular"] = seed.is_singular();
    out["curve"] = curve_to_json(seed.cubic());
    out["height"] = height;
    out["skipped"] = skipped;
    out["progressions"] = std::move(progressions);
    return out;
}

json cmd_congruent(const json& input, unsigned long height)
{
    if (!input.is_object())
        throw Error(ErrorCode::invalid_input, "congruent input must be an object");
    Rational delta;
    CurvePoint point;
    if (input.contains("triangle")) {
        const json& t = input["triangle"];
        Triangle tri{rational_field(t, "a"), rational_field(t, "b"), rational_field(t, "c"), Rational(0)};
        delta = tri.a * tri.b / 2;
        if (input.contains("delta") && rational_field(input, "delta") != delta)
            throw Error(ErrorCode::invalid_triangle, "triangle area does not equal delta");
        point = congruum_triangle_to_curve(tri, delta);
    } else {
        delta = rational_field(input, "delta");
        if (delta == 0)
            throw Error(ErrorCode::trivial_progression, "delta = 0 is not a congruum");
        if (input.contains("point")) {
            point = curve_point_from_json(input["point"]);
        } else if (input.contains("roots")) {
            const json& r = input["roots"];
            if (!r.is_array() || r.size() != 3)
                throw Error(ErrorCode::invalid_input, "\"roots\" must be an array of three rationals");
            point = congruum_ap_to_curve(rational_from_json(r[0]), rational_from_json(r[1]), rational_from_json(r[2]),
                                         delta);
        } else {
            auto found = search_points(congruum_curve(delta), height);
            auto it = std::find_if(found.begin(), found.end(), [](const CurvePoint& p) { return !trivial_orbit(p); });
            if (it == found.end()) {
                throw Error(ErrorCode::no_point_found,
                            "no point with Y != 0 of height <= " + std::to_string(height) + " on Y^2 = X^3 - delta^2 X");
            }
            point = *it;
        }
    }
    auto roots = congruum_curve_to_ap(point, delta);
    Triangle tri = congruum_curve_to_triangle(point, delta);

    json out;
    out["delta"] = to_string(delta);
    out["roots"] = roots_json(roots, false);
    out["squares"] = roots_json(roots, true);
    out["point"] = curve_point_to_json(point);
    out["triangle"] = triangle_to_json(tri);
    return out;
}

json cmd_normalize(const json& input)
{
    WeierstrassCurve curve = curve_from_json(input.at("curve"));
    CurvePoint p = curve_point_from_json(input.at("point"));
    if (p.is_infinity())
        throw Error(ErrorCode::not_order_four, "the point at infinity has order 1");
    FourTorsionNormalization n = normalize_four_torsion(curve, p);
    json out;
    out["k"] = to_string(n.k);
    out["k1"] = to_string(n.k1);
    out["substitution"] = {{"x0", to_string(n.x0)}, {"y0", to_string(n.y0)}, {"a1", to_string(n.a1)},
                           {"X", "16 k1^2 (x - x0)"},
                           {"Y", "64 k1^3 (y - y0) + 32 k1^2 (a1 k1 - 1)(x - x0)"}};
    out["curve"] = curve_to_json(ek_model(n.k));
    out["image"] = curve_point_to_json(n.apply(p));
    return out;
}

const std::vector<Table1Row>& table1_rows()
{
    static const std::vector<Table1Row> rows = [] {
        auto r = [](long v) { return Rational(v); };
        auto pt = [](long x, long y) { return CurvePoint(Rational(x), Rational(y)); };
        return std::vector<Table1Row>{
            {{r(-1), r(-1), r(1), r(1)}, CurvePoint::infinity()},
            {{r(-1), r(1), r(-1), r(1)}, pt(0, 0)},
            {{r(-1), r(-1), r(-1), r(1)}, pt(-2, 2)},
            {{r(-1), r(1), r(1), r(1)}, pt(-2, -2)},
            {{r(1), r(1), r(1), r(1)}, pt(-1, 0)},
            {{r(1), r(-1), r(-1), r(1)}, pt(-4, 0)},
            {{r(1), r(1), r(-1), r(1)}, pt(2, 6)},
            {{r(1), r(-1), r(1), r(1)}, pt(2, -6)},
        };
    }();
    return rows;
}

namespace {

json check(const std::string& name, bool ok, json detail = json::object())
{
    json out;
    out["name"] = name;
    out["ok"] = ok;
    if (!detail.empty())
        out["detail"] = std::move(detail);
    return out;
}

void table1_checks(json& checks)
{
    const WeierstrassCurve curve = x024_curve();
    const auto& rows = table1_rows();
    std::size_t matched = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        json tuple = json::array();
        for (const Rational& x : rows[i].x)
            tuple.push_back(to_string(x));
        json detail{{"x", tuple}, {"expected", curve_point_to_json(rows[i].point)}};
        bool ok = false;
        try {
            CurvePoint got = four_squares_to_curve(rows[i].x);
            detail["computed"] = curve_point_to_json(got);
            ok = got == rows[i].point;
        } catch (const Error& e) {
            detail["error"] = std::string(error_code_name(e.code()));
        }
        matched += ok ? 1 : 0;
        checks.push_back(check("table1.row" + std::to_string(i + 1), ok, std::move(detail)));
    }

    bool all_on = std::all_of(rows.begin(), rows.end(), [&](const Table1Row& r) { return curve.contains(r.point); });
    checks.push_back(check("table1.on_curve", all_on));

    std::vector<CurvePoint> pts;
    for (const auto& r : rows)
        pts.push_back(r.point);
    std::sort(pts.begin(), pts.end());
    bool closed = all_on;
    for (std::size_t i = 0; closed && i < pts.size(); ++i) {
        for (std::size_t j = 0; closed && j < pts.size(); ++j)
            closed = std::binary_search(pts.begin(), pts.end(), add(curve, pts[i], pts[j]));
    }
    std::vector<int> orders;
    if (all_on) {
        for (const auto& p : pts)
            orders.push_back(order(curve, p).value_or(0));
    }
    std::sort(orders.begin(), orders.end());
    bool z2z4 = orders == std::vector<int>{1, 2, 2, 2, 4, 4, 4, 4};
    json order_list = json::array();
    for (int o : orders)
        order_list.push_back(o);
    checks.push_back(check("table1.group_z2xz4", closed && z2z4, {{"closed", closed}, {"orders", order_list}}));
    checks.push_back(check("table1.rows_matched", matched == rows.size(),
                           {{"matched", matched}, {"total", rows.size()}}));
}

void tower_checks(json& checks, int order)
{
    TowerReport report = verify_tower(order);
    json detail{{"order", order}};
    if (!report.ok) {
        detail["identity"] = report.identity;
        detail["mismatch_exponent"] = *report.mismatch_exponent;
    }
    checks.push_back(check("tower", report.ok, std::move(detail)));
}

// XY / (Y^2 + 2XY + k X^2): delta up to the seed-dependent factor.
Rational delta_shape(const Rational& k, const CurvePoint& p)
{
    const Rational& x = p.x();
    const Rational& y = p.y();
    return Rational(x * y / (y * y + 2 * x * y + k * x * x));
}

void symmetry_checks(json& checks)
{
    const std::array<Rational, 6> ks{Rational(-1), Rational(2), Rational(3), Rational(1, 2), Rational(25, 9),
                                     Rational(25, 16)};
    std::size_t sampled = 0;
    std::size_t negations = 0;
    bool group_ok = true;
    bool negation_ok = true;
    for (const Rational& k : ks) {
        WeierstrassCurve curve = ek_model(k);
        std::vector<CurvePoint> sample = search_points(curve, 12);
        sample.push_back(CurvePoint::infinity());
        for (const CurvePoint& p : sample) {
            ++sampled;
            CurvePoint s1 = sigma_action(k, p);
            CurvePoint s3 = sigma_action(k, sigma_action(k, s1));
            CurvePoint s4 = sigma_action(k, s3);
            CurvePoint t1 = tau_action(k, p);
            group_ok = group_ok && s4 == p && tau_action(k, t1) == p
                       && tau_action(k, sigma_action(k, t1)) == s3;
            if (trivial_orbit(p))
                continue;
            Rational base = delta_shape(k, p);
            for (const CurvePoint& image : {s1, t1}) {
                if (trivial_orbit(image))
                    continue;
                Rational denom = image.y() * image.y() + 2 * image.x() * image.y() + k * image.x() * image.x();
                if (denom == 0)
                    continue;
                ++negations;
                negation_ok = negation_ok && delta_shape(k, image) == -base;
            }
        }
    }
    checks.push_back(check("symmetry.sigma4_tau2_conjugation", group_ok, {{"points", sampled}}));
    checks.push_back(check("symmetry.delta_negation", negation_ok, {{"pairs", negations}}));
}

} // namespace

json cmd_verify(const std::string& suite, int order)
{
    bool all = suite == "all";
    if (!all && suite != "table1" && suite != "tower" && suite != "symmetry")
        throw Error(ErrorCode::invalid_input, "unknown suite \"" + suite + "\" (table1, tower, symmetry, all)");
    json checks = json::array();
    if (all || suite == "table1")
        table1_checks(checks);
    if (all || suite == "tower")
        tower_checks(checks, order);
    if (all || suite == "symmetry")
        symmetry_checks(checks);
    bool ok = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["ok"].get<bool>(); });
    json out;
    out["suite"] = suite;
    out["ok"] = ok;
    out["checks"] = std::move(checks);
    return out;
}

json cmd_series(const std::string& name, int order)
{
    bool all = name == "all";
    if (!all && name != "k" && name != "r" && name != "j")
        throw Error(ErrorCode::invalid_input, "unknown series \"" + name + "\" (k, r, j, all)");
    json series = json::object();
    if (all || name == "k")
        series["k"] = series_to_json(k_series(order));
    if (all || name == "r")
        series["r"] = series_to_json(r_series(order));
    if (all || name == "j")
        series["j"] = series_to_json(j_series(order));
    json out;
    out["order"] = order;
    out["series"] = std::move(series);
    return out;
}

} // namespace conicap
