#include "conicap/conic.hpp"

#include "conicap/error.hpp"

namespace conicap {

Conic Conic::make(Rational A, Rational B, Rational C, Rational D, Rational E, Rational F)
{
    if (A == 0 && B == 0 && C == 0 && D == 0 && E == 0 && F == 0)
        throw Error(ErrorCode::zero_conic, "all six conic coefficients are zero");
    return Conic{std::move(A), std::move(B), std::move(C), std::move(D), std::move(E), std::move(F)};
}

std::array<std::array<Rational, 3>, 3> Conic::adjugate() const
{
    Rational m11 = E * E - C * F;
    Rational m12 = B * F - D * E;
    Rational m13 = C * D - B * E;
    Rational m22 = D * D - A * F;
    Rational m23 = A * E - B * D;
    Rational m33 = B * B - A * C;
    return {{{m11, m12, m13}, {m12, m22, m23}, {m13, m23, m33}}};
}

Rational Conic::determinant() const
{
    return A * (C * F - E * E) - B * (B * F - D * E) + D * (B * E - C * D);
}

Conic Conic::scaled(const Rational& lambda) const
{
    return Conic{lambda * A, lambda * B, lambda * C, lambda * D, lambda * E, lambda * F};
}

LinFracMap LinFracMap::make(Rational a, Rational b, Rational c, Rational d, Rational e, Rational f)
{
    bool top_zero = a == 0 && b == 0 && c == 0;
    bool bottom_zero = d == 0 && e == 0 && f == 0;
    if (top_zero || bottom_zero)
        throw Error(ErrorCode::invalid_map, "linear fractional map has a zero row");
    // proportional rows <=> all 2x2 minors vanish
    if (a * e == b * d && a * f == c * d && b * f == c * e)
        throw Error(ErrorCode::invalid_map, "linear fractional map rows are proportional");
    return LinFracMap{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f)};
}

ProjPoint ProjPoint::make(QuadExt x1, QuadExt x2, QuadExt x0)
{
    if (x1.is_zero() && x2.is_zero() && x0.is_zero())
        throw Error(ErrorCode::invalid_input, "projective point with all coordinates zero");
    return ProjPoint{std::move(x1), std::move(x2), std::move(x0)};
}

bool operator==(const ProjPoint& p, const ProjPoint& q)
{
    try {
        return p.x1 * q.x2 == p.x2 * q.x1 && p.x1 * q.x0 == p.x0 * q.x1 && p.x2 * q.x0 == p.x0 * q.x2;
    } catch (const Error&) {
        return false; // coordinates in different quadratic fields
    }
}

QuadPoly disc_poly(const Conic& conic, const LinFracMap& map)
{
    auto m = conic.adjugate();
    // v(t) = v0 - t v1
    std::array<Rational, 3> v0{map.a, map.b, map.c};
    std::array<Rational, 3> v1{map.d, map.e, map.f};
    QuadPoly out{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out.c0 += v0[i] * m[i][j] * v0[j];
            out.c1 -= (v0[i] * v1[j] + v1[i] * v0[j]) * m[i][j];
            out.c2 += v1[i] * m[i][j] * v1[j];
        }
    }
    return out;
}

ProjPoint point_at(const Conic& conic, const LinFracMap& map, const Rational& t, FiberSign sign,
                   Reality reality)
{
    const auto& [A, B, C, D, E, F] = conic;
    Rational alpha = map.a - map.d * t;
    Rational beta = map.b - map.e * t;
    Rational gamma = map.c - map.f * t;
    Rational disc = disc_poly(conic, map)(t);

    if (reality == Reality::real && sgn(disc) < 0)
        throw Error(ErrorCode::negative_radicand, "Disc(" + to_string(t) + ") = " + to_string(disc) + " < 0");

    QuadExt root;
    if (disc != 0) {
        auto [d, m] = squarefree_decompose(disc);
        root = QuadExt(Rational(0), m, d);
    }
    if (sign == FiberSign::minus)
        root = -root;

    QuadExt x1 = QuadExt(B * beta * gamma - C * alpha * gamma - D * beta * beta + E * alpha * beta) +
                 QuadExt(beta) * root;
    QuadExt x2 = QuadExt(-A * beta * gamma + B * alpha * gamma + D * alpha * beta - E * alpha * alpha) -
                 QuadExt(alpha) * root;
    QuadExt x0 = QuadExt(A * beta * beta - 2 * B * alpha * beta + C * alpha * alpha);

    if (x1.is_zero() && x2.is_zero() && x0.is_zero()) {
        throw Error(ErrorCode::degenerate_fiber,
                    "fiber over t = " + to_string(t) + " has no isolated point (all coordinates vanish)");
    }
    return ProjPoint{x1, x2, x0};
}

std::optional<QuadExt> eval_map(const LinFracMap& map, const ProjPoint& p)
{
    QuadExt num = QuadExt(map.a) * p.x1 + QuadExt(map.b) * p.x2 + QuadExt(map.c) * p.x0;
    QuadExt den = QuadExt(map.d) * p.x1 + QuadExt(map.e) * p.x2 + QuadExt(map.f) * p.x0;
    if (den.is_zero()) {
        if (num.is_zero())
            throw Error(ErrorCode::indeterminate, "linear fractional map is 0/0 at this point");
        return std::nullopt;
    }
    return num / den;
}

bool on_conic(const Conic& conic, const ProjPoint& p)
{
    const auto& [A, B, C, D, E, F] = conic;
    const auto& [x1, x2, x0] = p;
    QuadExt value = QuadExt(A) * x1 * x1 + QuadExt(2 * B) * x1 * x2 + QuadExt(C) * x2 * x2 +
                    QuadExt(2 * D) * x1 * x0 + QuadExt(2 * E) * x2 * x0 + QuadExt(F) * x0 * x0;
    return value.is_zero();
}

QuadExt disc_via_determinant(const Conic& conic, const LinFracMap& map, const ProjPoint& p)
{
    const auto& [A, B, C, D, E, F] = conic;
    const auto& [x1, x2, x0] = p;
    QuadExt den = QuadExt(map.d) * x1 + QuadExt(map.e) * x2 + QuadExt(map.f) * x0;
    if (den.is_zero())
        throw Error(ErrorCode::division_by_zero, "denominator of the map vanishes at the point");
    QuadExt r1 = (QuadExt(A) * x1 + QuadExt(B) * x2 + QuadExt(D) * x0) / den;
    QuadExt r2 = (QuadExt(B) * x1 + QuadExt(C) * x2 + QuadExt(E) * x0) / den;
    QuadExt r3 = (QuadExt(D) * x1 + QuadExt(E) * x2 + QuadExt(F) * x0) / den;
    QuadExt a(map.a), b(map.b), c(map.c), d(map.d), e(map.e), f(map.f);
    return a * (e * r3 - f * r2) - b * (d * r3 - f * r1) + c * (d * r2 - e * r1);
}

} // namespace conicap
