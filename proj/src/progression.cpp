#include "conicap/progression.hpp"

#include "conicap/error.hpp"

namespace conicap {

namespace {

void require_nonzero(const Rational& value, const char* what)
{
    if (value == 0)
        throw Error(ErrorCode::excluded_locus, std::string(what) + " vanishes");
}

void require_on(const WeierstrassCurve& curve, const CurvePoint& p)
{
    if (!curve.contains(p))
        throw Error(ErrorCode::not_on_curve, "point is not on the curve");
}

void require_affine_nonzero_y(const CurvePoint& p)
{
    if (p.is_infinity() || p.y() == 0)
        throw Error(ErrorCode::excluded_locus, "map undefined at infinity or at Y = 0");
}

} // namespace

Rational modulus_k(const QuadPoly& disc, const Rational& t0)
{
    Rational value = disc(t0);
    if (value == 0)
        throw Error(ErrorCode::disc_zero, "Disc(t0) = 0; c_n and k are undefined");
    Rational slope = disc.derivative(t0);
    if (slope == 0)
        throw Error(ErrorCode::disc_derivative_zero, "Disc'(t0) = 0; k is undefined");
    Rational slope_sq = slope * slope;
    return Rational((slope_sq - 2 * value * disc.second_derivative()) / slope_sq);
}

TaylorRatios taylor_ratios(const QuadPoly& disc, const Rational& t)
{
    Rational value = disc(t);
    if (value == 0)
        throw Error(ErrorCode::disc_zero, "Disc(t) = 0; c_n undefined");
    return {Rational(disc.derivative(t) / value), Rational(disc.c2 / value)};
}

ProgressionSeed make_seed(const Conic& conic, const LinFracMap& map, const Rational& t0)
{
    if (conic.is_degenerate())
        throw Error(ErrorCode::degenerate_conic, "conic is degenerate (zero determinant)");
    QuadPoly disc = disc_poly(conic, map);
    Rational value = disc(t0);
    if (value == 0)
        throw Error(ErrorCode::disc_zero, "Disc(t0) = 0 at t0 = " + to_string(t0));
    auto root = rat_sqrt(value);
    if (!root) {
        throw Error(ErrorCode::disc_not_square,
                    "Disc(t0) = " + to_string(value) + " is not a rational square; no rational point over t0");
    }
    Rational k = modulus_k(disc, t0);
    if (k == 0)
        throw Error(ErrorCode::k_zero, "k = 0 at t0 = " + to_string(t0));
    return ProgressionSeed{conic, map, t0, disc, *root, k};
}

Rational common_difference(const QuadPoly& disc, const Rational& t0, const Rational& k, const CurvePoint& p)
{
    if (p.is_infinity() || p.x() == 0 || p.y() == 0)
        return Rational(0);
    const Rational& x = p.x();
    const Rational& y = p.y();
    Rational slope = disc.derivative(t0);
    if (slope == 0)
        throw Error(ErrorCode::disc_derivative_zero, "Disc'(t0) = 0");
    Rational den = y * y + 2 * x * y + k * x * x;
    if (den == 0)
        throw Error(ErrorCode::division_by_zero, "Y^2 + 2XY + kX^2 = 0");
    return Rational(-(disc(t0) / slope) * 4 * x * y / den);
}

ApTriple three_term_ap(const ProgressionSeed& seed, const CurvePoint& p, FiberSign sign)
{
    require_on(seed.cubic(), p);
    Rational delta = common_difference(seed.disc, seed.t0, seed.k, p);
    if (delta == 0)
        throw Error(ErrorCode::trivial_progression, "point lies in the trivial orbit (delta = 0)");
    std::array<Rational, 3> ts{Rational(seed.t0 - delta), seed.t0, Rational(seed.t0 + delta)};
    std::array<ProjPoint, 3> points;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!is_rational_square(seed.disc(ts[i]))) {
            throw Error(ErrorCode::disc_not_square,
                        "Disc(" + to_string(ts[i]) + ") is not a square; construction invariant violated");
        }
        points[i] = point_at(seed.conic, seed.map, ts[i], sign);
    }
    return ApTriple{points, delta, ts};
}

Rational extend_sequence(const QuadPoly& disc, const Rational& t, const Rational& u)
{
    if (disc(t) != 0 && !is_rational_square(disc(t)))
        throw Error(ErrorCode::disc_not_square, "sqrt Disc(t) is not rational");
    auto c = taylor_ratios(disc, t);
    Rational den = u * u - c.c2;
    if (den == 0)
        throw Error(ErrorCode::excluded_locus, "u^2 = c2; the step is infinite");
    return Rational(t + (c.c1 - 2 * u) / den);
}

std::vector<Rational> extend_sequence_chain(const QuadPoly& disc, const Rational& t, std::span<const Rational> slopes)
{
    std::vector<Rational> out{t};
    for (const Rational& u : slopes)
        out.push_back(extend_sequence(disc, out.back(), u));
    return out;
}

SlopePair slope_pair(const Rational& delta, const Rational& r0, const Rational& r_plus, const Rational& r_minus)
{
    require_nonzero(delta, "delta");
    require_nonzero(r0, "sqrt Disc(t)");
    Rational scale = delta * r0;
    return {Rational((r_plus - r0) / scale), Rational((r_minus - r0) / scale)};
}

CurvePoint uv_to_xy(const Rational& k, const Rational& c1, const SlopePair& pair)
{
    Rational den = pair.v - pair.u - c1;
    require_nonzero(den, "v - u - c1");
    return {Rational(2 * k * c1 / den), Rational(2 * k * (2 * pair.u - c1) / den)};
}

SlopePair xy_to_uv(const Rational& k, const Rational& c1, const CurvePoint& p)
{
    if (p.is_infinity() || p.x() == 0)
        throw Error(ErrorCode::excluded_locus, "inverse birational map needs X != 0");
    const Rational& x = p.x();
    const Rational& y = p.y();
    return {Rational(c1 * (y + x) / (2 * x)), Rational(c1 * (y + 3 * x + 4 * k) / (2 * x))};
}

bool quartic_identity_holds(const TaylorRatios& c, const Rational& delta, const SlopePair& pair)
{
    Rational lhs_num = delta * pair.v + 1;
    Rational lhs_den = delta * pair.u + 1;
    Rational plus = 1 + c.c1 * delta + c.c2 * delta * delta;
    Rational minus = 1 - c.c1 * delta + c.c2 * delta * delta;
    return lhs_num * lhs_num * plus == lhs_den * lhs_den * minus;
}

CurvePoint sigma_action(const Rational& k, const CurvePoint& p)
{
    WeierstrassCurve curve = ek_model(k);
    require_on(curve, p);
    if (p.is_infinity() || p.x() == 0)
        return add(curve, EkCurve::torsion_generator(), p);
    const Rational& x = p.x();
    const Rational& y = p.y();
    Rational x_sq = x * x;
    return {Rational(-4 * k * y / x_sq), Rational(4 * k * k * (x_sq - 4 * y) / (x_sq * x))};
}

CurvePoint tau_action(const Rational& k, const CurvePoint& p)
{
    require_on(ek_model(k), p);
    if (p.is_infinity())
        return p;
    return {p.x(), Rational(-p.y() - 4 * p.x() - 4 * k)};
}

CurvePoint singular_param(const Rational& t)
{
    Rational s = t + 1;
    require_nonzero(s, "t + 1");
    return {Rational(-4 * t / (s * s)), Rational(4 * (t - 1) / (s * s * s))};
}

Rational singular_param_inverse(const CurvePoint& p)
{
    if (p.is_infinity())
        throw Error(ErrorCode::excluded_locus, "the point at infinity has no finite parameter");
    Rational den = p.y() + p.x();
    require_nonzero(den, "Y + X");
    return Rational(-(p.y() + 3 * p.x() + 4) / den);
}

std::array<Rational, 3> three_squares_param(const Rational& t)
{
    Rational t_sq = t * t;
    Rational r1 = t_sq - 2 * t - 1;
    Rational r2 = t_sq + 1;
    Rational r3 = t_sq + 2 * t - 1;
    return {Rational(r1 * r1), Rational(r2 * r2), Rational(r3 * r3)};
}

Rational three_squares_recover(const Rational& x1, const Rational& x2, const Rational& x3)
{
    Rational den = x1 - 2 * x2 + x3;
    require_nonzero(den, "x1 - 2x2 + x3");
    return Rational((x1 - x3) / den);
}

WeierstrassCurve congruum_curve(const Rational& delta)
{
    return WeierstrassCurve{Rational(0), Rational(0), Rational(0), Rational(-delta * delta), Rational(0)};
}

CurvePoint congruum_ap_to_curve(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& delta)
{
    if (delta == 0)
        throw Error(ErrorCode::trivial_progression, "congruum must be nonzero");
    if (x2 * x2 - x1 * x1 != delta || x3 * x3 - x2 * x2 != delta) {
        throw Error(ErrorCode::not_arithmetic_progression,
                    "x1^2, x2^2, x3^2 do not have common difference " + to_string(delta));
    }
    Rational den = x1 - 2 * x2 + x3;
    require_nonzero(den, "x1 - 2x2 + x3");
    return {Rational((x1 - x3) * delta / den), Rational(-2 * delta * delta / den)};
}

std::array<Rational, 3> congruum_curve_to_ap(const CurvePoint& p, const Rational& delta)
{
    require_on(congruum_curve(delta), p);
    require_affine_nonzero_y(p);
    const Rational& x = p.x();
    Rational two_y = 2 * p.y();
    Rational x_sq = x * x;
    Rational d_sq = delta * delta;
    return {Rational((x_sq - 2 * delta * x - d_sq) / two_y), Rational((x_sq + d_sq) / two_y),
            Rational((x_sq + 2 * delta * x - d_sq) / two_y)};
}

Triangle congruum_curve_to_triangle(const CurvePoint& p, const Rational& delta)
{
    require_on(congruum_curve(delta), p);
    require_affine_nonzero_y(p);
    const Rational& x = p.x();
    const Rational& y = p.y();
    Rational x_sq = x * x;
    Rational d_sq = delta * delta;
    return {Rational((x_sq - d_sq) / y), Rational(2 * delta * x / y), Rational((x_sq + d_sq) / y), Rational(0)};
}

CurvePoint congruum_triangle_to_curve(const Triangle& tri, const Rational& delta)
{
    if (delta == 0)
        throw Error(ErrorCode::trivial_progression, "congruum must be nonzero");
    if (tri.cos_theta != 0 || tri.a * tri.a + tri.b * tri.b != tri.c * tri.c || tri.a * tri.b != 2 * delta)
        throw Error(ErrorCode::invalid_triangle, "need a right triangle with ab = 2 delta");
    Rational den = tri.c - tri.a;
    require_nonzero(den, "c - a");
    return {Rational(tri.b * delta / den), Rational(2 * delta * delta / den)};
}

CurvePoint four_squares_to_curve(const std::array<Rational, 4>& x)
{
    const auto& [x1, x2, x3, x4] = x;
    if (x1 == 0 && x2 == 0 && x3 == 0 && x4 == 0)
        throw Error(ErrorCode::invalid_input, "zero 4-tuple");
    Rational x_form = 2 * (x1 - 3 * x2 - 3 * x3 + x4);
    Rational y_form = 6 * (x1 - x2 + x3 - x4);
    Rational den = x1 + 3 * x2 + 3 * x3 + x4;
    if (den != 0)
        return {Rational(x_form / den), Rational(y_form / den)};
    if (x_form == 0 && y_form == 0) {
        // Only the projection centre (-1 : -1 : 1 : 1) annihilates all three
        // forms; its image is the tangent-direction limit.
        return {Rational(0), Rational(0)};
    }
    if (x_form == 0)
        return CurvePoint::infinity();
    throw Error(ErrorCode::excluded_locus, "point at infinity other than (0:1:0); input is not on the curve of squares");
}

std::array<Rational, 4> four_squares_from_curve(const CurvePoint& p)
{
    require_on(x024_curve(), p);
    if (p.is_infinity())
        return {Rational(-1), Rational(1), Rational(-1), Rational(1)};
    const Rational& x = p.x();
    const Rational& y = p.y();
    if (x == 0 && y == 0)
        return {Rational(-1), Rational(-1), Rational(1), Rational(1)};
    Rational x_sq = x * x;
    Rational den = 6 * x + 3 * x_sq + 2 * y - x * y;
    require_nonzero(den, "6X + 3X^2 + 2Y - XY");
    return {Rational((6 * x + 3 * x_sq - 2 * y + x * y) / den), Rational((2 * x - x_sq - 2 * y - x * y) / den),
            Rational((2 * x - x_sq + 2 * y + x * y) / den), Rational(1)};
}

std::array<QuadExt, 4> four_roots_from_twist(const Rational& k, const Rational& u, const Rational& v)
{
    if (!twist_x024(k).contains(CurvePoint(u, v)))
        throw Error(ErrorCode::not_on_curve, "point is not on the quadratic twist");
    if (v == 0)
        throw Error(ErrorCode::excluded_locus, "V = 0 gives a constant progression (2-torsion)");
    QuadExt root_k = quad_sqrt(k);
    Rational outer = 3 * k * u * (2 * k + u);
    Rational inner = k * u * (2 * k - u);
    QuadExt outer_surd = root_k * QuadExt(Rational(v * (2 * k - u)));
    QuadExt inner_surd = root_k * QuadExt(Rational(v * (2 * k + u)));
    return {QuadExt(outer) - outer_surd, QuadExt(inner) - inner_surd, QuadExt(inner) + inner_surd,
            QuadExt(outer) + outer_surd};
}

std::array<QuadExt, 4> four_squares_from_twist(const Rational& k, const Rational& u, const Rational& v)
{
    auto roots = four_roots_from_twist(k, u, v);
    return {roots[0].square(), roots[1].square(), roots[2].square(), roots[3].square()};
}

std::optional<QuadExt> square_progression_difference(std::span<const QuadExt> roots)
{
    if (roots.size() < 2)
        return std::nullopt;
    QuadExt gap = roots[1].square() - roots[0].square();
    for (std::size_t i = 2; i < roots.size(); ++i) {
        if (roots[i].square() - roots[i - 1].square() != gap)
            return std::nullopt;
    }
    return gap;
}

FreyTriple frey_quantities(const QuadPoly& disc, const Rational& t, const Rational& delta)
{
    Rational before = disc(Rational(t - delta));
    Rational here = disc(t);
    Rational after = disc(Rational(t + delta));
    return {Rational(here - before), Rational(after - here), Rational(after - before)};
}

FreyTriple frey_quantities_taylor(const QuadPoly& disc, const Rational& t, const Rational& delta)
{
    Rational linear = disc.derivative(t) * delta;
    Rational quadratic = disc.second_derivative() * delta * delta / 2;
    return {Rational(linear - quadratic), Rational(linear + quadratic), Rational(2 * linear)};
}

WeierstrassCurve frey_curve(const FreyTriple& gaps)
{
    return WeierstrassCurve{Rational(0), Rational(gaps.gap_b - gaps.gap_a), Rational(0),
                            Rational(-gaps.gap_a * gaps.gap_b), Rational(0)};
}

CurvePoint frey_ap_to_curve(const Rational& x1, const Rational& x2, const Rational& x3, const FreyTriple& gaps)
{
    const auto& [A, B, C] = gaps;
    if (x2 * x2 - x1 * x1 != A || x3 * x3 - x2 * x2 != B)
        throw Error(ErrorCode::not_arithmetic_progression, "x2^2 - x1^2 != A or x3^2 - x2^2 != B");
    Rational den = B * x1 - C * x2 + A * x3;
    require_nonzero(den, "B x1 - C x2 + A x3");
    Rational ab = A * B;
    return {Rational(ab * (x1 - x3) / den), Rational(-ab * C / den)};
}

std::array<Rational, 3> frey_curve_to_ap(const CurvePoint& p, const FreyTriple& gaps)
{
    require_on(frey_curve(gaps), p);
    require_affine_nonzero_y(p);
    const auto& [A, B, C] = gaps;
    const Rational& x = p.x();
    Rational two_y = 2 * p.y();
    Rational x_sq = x * x;
    Rational ab = A * B;
    return {Rational((x_sq - 2 * A * x - ab) / two_y), Rational((x_sq + ab) / two_y),
            Rational((x_sq + 2 * B * x - ab) / two_y)};
}

Triangle frey_curve_to_triangle(const CurvePoint& p, const FreyTriple& gaps)
{
    require_on(frey_curve(gaps), p);
    require_affine_nonzero_y(p);
    const auto& [A, B, C] = gaps;
    require_nonzero(C, "C");
    const Rational& x = p.x();
    const Rational& y = p.y();
    Rational x_sq = x * x;
    Rational ab = A * B;
    return {Rational((x_sq + (B - A) * x - ab) / y), Rational(C * x / y), Rational((x_sq + ab) / y),
            Rational((B - A) / C)};
}

CurvePoint frey_triangle_to_curve(const Triangle& tri, const FreyTriple& gaps)
{
    const auto& [A, B, C] = gaps;
    require_nonzero(C, "C");
    if (tri.cos_theta != (B - A) / C || !triangle_law_holds(tri) || !squared_area_holds(tri, gaps))
        throw Error(ErrorCode::invalid_triangle, "triangle does not satisfy the theta-triangle relations for these gaps");
    Rational den = (B - A) * tri.b + C * (tri.c - tri.a);
    require_nonzero(den, "(B - A) b + C (c - a)");
    Rational ab2 = 2 * A * B;
    return {Rational(ab2 * tri.b / den), Rational(ab2 * C / den)};
}

bool triangle_law_holds(const Triangle& tri)
{
    return tri.a * tri.a - 2 * tri.a * tri.b * tri.cos_theta + tri.b * tri.b == tri.c * tri.c;
}

bool squared_area_holds(const Triangle& tri, const FreyTriple& gaps)
{
    Rational ab = tri.a * tri.b;
    return ab * ab * (1 - tri.cos_theta * tri.cos_theta) == 4 * gaps.gap_a * gaps.gap_b;
}

} // namespace conicap
