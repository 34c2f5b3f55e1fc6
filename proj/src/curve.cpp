#include "conicap/curve.hpp"

#include "conicap/error.hpp"

namespace conicap {

bool operator<(const CurvePoint& p, const CurvePoint& q)
{
    if (p.infinite_ || q.infinite_)
        return p.infinite_ && !q.infinite_;
    if (p.x_ != q.x_)
        return p.x_ < q.x_;
    return p.y_ < q.y_;
}

Rational WeierstrassCurve::c4() const
{
    Rational b2v = b2();
    return b2v * b2v - 24 * b4();
}

Rational WeierstrassCurve::discriminant() const
{
    Rational b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
    return -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
}

Rational WeierstrassCurve::j_invariant() const
{
    Rational disc = discriminant();
    if (disc == 0)
        throw Error(ErrorCode::singular_curve, "j-invariant of a singular cubic");
    Rational c = c4();
    return Rational(c * c * c / disc);
}

bool WeierstrassCurve::contains(const CurvePoint& p) const
{
    if (p.is_infinity())
        return true;
    const Rational& x = p.x();
    const Rational& y = p.y();
    return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
}

bool WeierstrassCurve::contains(const QuadExt& x, const QuadExt& y) const
{
    QuadExt lhs = y * y + QuadExt(a1) * x * y + QuadExt(a3) * y;
    QuadExt rhs = x * x * x + QuadExt(a2) * x * x + QuadExt(a4) * x + QuadExt(a6);
    return lhs == rhs;
}

WeierstrassCurve WeierstrassCurve::changed(const WeierstrassChange& ch) const
{
    const auto& [u, r, s, t] = ch;
    if (u == 0)
        throw Error(ErrorCode::invalid_input, "Weierstrass change with u = 0");
    Rational u2 = u * u;
    Rational u3 = u2 * u;
    WeierstrassCurve out;
    out.a1 = (a1 + 2 * s) / u;
    out.a2 = (a2 - s * a1 + 3 * r - s * s) / u2;
    out.a3 = (a3 + r * a1 + 2 * t) / u3;
    out.a4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / (u2 * u2);
    out.a6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / (u3 * u3);
    return out;
}

CurvePoint WeierstrassCurve::change_point(const WeierstrassChange& ch, const CurvePoint& p) const
{
    if (p.is_infinity())
        return p;
    const auto& [u, r, s, t] = ch;
    Rational dx = p.x() - r;
    return {Rational(dx / (u * u)), Rational((p.y() - s * dx - t) / (u * u * u))};
}

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p)
{
    if (p.is_infinity())
        return p;
    return {p.x(), Rational(-p.y() - curve.a1 * p.x() - curve.a3)};
}

CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q)
{
    if (!curve.contains(p) || !curve.contains(q))
        throw Error(ErrorCode::not_on_curve, "group law applied to a point off the curve");
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;

    const auto& [a1, a2, a3, a4, a6] = curve;
    Rational lambda, nu;
    if (p.x() == q.x()) {
        Rational tangent_den = p.y() + q.y() + a1 * q.x() + a3;
        if (tangent_den == 0)
            return CurvePoint::infinity();
        const Rational& x = p.x();
        const Rational& y = p.y();
        Rational den = 2 * y + a1 * x + a3;
        lambda = (3 * x * x + 2 * a2 * x + a4 - a1 * y) / den;
        nu = (-x * x * x + a4 * x + 2 * a6 - a3 * y) / den;
    } else {
        Rational dx = q.x() - p.x();
        lambda = (q.y() - p.y()) / dx;
        nu = (p.y() * q.x() - q.y() * p.x()) / dx;
    }
    Rational x3 = lambda * lambda + a1 * lambda - a2 - p.x() - q.x();
    Rational y3 = -(lambda + a1) * x3 - nu - a3;
    return {x3, y3};
}

CurvePoint mul(const WeierstrassCurve& curve, long n, const CurvePoint& p)
{
    if (!curve.contains(p))
        throw Error(ErrorCode::not_on_curve, "scalar multiple of a point off the curve");
    CurvePoint base = n < 0 ? negate(curve, p) : p;
    unsigned long m = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CurvePoint acc;
    while (m != 0) {
        if (m & 1UL)
            acc = add(curve, acc, base);
        m >>= 1;
        if (m != 0)
            base = add(curve, base, base);
    }
    return acc;
}

std::optional<int> order(const WeierstrassCurve& curve, const CurvePoint& p)
{
    CurvePoint q = p;
    for (int n = 1; n <= max_tested_order; ++n) {
        if (q.is_infinity())
            return n;
        q = add(curve, q, p);
    }
    return std::nullopt;
}

WeierstrassCurve ek_model(const Rational& k)
{
    return WeierstrassCurve{Rational(4), k, Rational(4 * k), Rational(0), Rational(0)};
}

EkCurve::EkCurve(Rational k) : k_(std::move(k)), curve_(ek_model(k_))
{
    if (k_ == 0 || k_ == 1)
        throw Error(ErrorCode::singular_curve, "E_k is singular for k = " + to_string(k_));
}

std::array<Rational, 3> four_mult_formula(const Rational& k2, const Rational& k3)
{
    WeierstrassCurve model{Rational(4), k2, Rational(4 * k3), Rational(0), Rational(0)};
    if (!model.is_elliptic())
        throw Error(ErrorCode::singular_curve, "Y^2 + 4XY + 4k3 Y = X^3 + k2 X^2 is singular");
    Rational diff = k3 - k2;
    Rational k2_cubed = k2 * k2 * k2;
    return {Rational(4 * k2 * diff * (16 * k3 * k3 - 16 * k3 * k2 + k2_cubed)),
            Rational(k2_cubed * (32 * k3 * k3 - 48 * k3 * k2 + 16 * k2 * k2 + k2_cubed)),
            Rational(64 * diff * diff * diff)};
}

CurvePoint FourTorsionNormalization::apply(const CurvePoint& p) const
{
    if (p.is_infinity())
        return p;
    Rational dx = p.x() - x0;
    Rational k1_sq = k1 * k1;
    return {Rational(16 * k1_sq * dx),
            Rational(64 * k1_sq * k1 * (p.y() - y0) + 32 * k1_sq * (a1 * k1 - 1) * dx)};
}

FourTorsionNormalization normalize_four_torsion(const WeierstrassCurve& curve, const CurvePoint& p)
{
    if (p.is_infinity() || !curve.contains(p))
        throw Error(ErrorCode::not_on_curve, "normalization needs an affine point on the curve");
    const Rational& x0 = p.x();
    const Rational& y0 = p.y();
    Rational b2 = curve.b2(), b4 = curve.b4(), b6 = curve.b6(), b8 = curve.b8();

    Rational tangent = 2 * y0 + curve.a1 * x0 + curve.a3;
    if (tangent == 0)
        throw Error(ErrorCode::not_order_four, "point has order 2");
    Rational den = 6 * x0 * x0 + b2 * x0 + b4;
    if (den == 0)
        throw Error(ErrorCode::not_order_four, "6x0^2 + b2 x0 + b4 = 0; point is not of order 4");

    Rational x0_sq = x0 * x0;
    Rational k1 = tangent / den;
    Rational k2 = 16 * (3 * x0_sq * x0_sq + b2 * x0_sq * x0 + 3 * b4 * x0_sq + 3 * b6 * x0 + b8) / (den * den);
    Rational tangent_sq = tangent * tangent;
    Rational k3 = 16 * tangent_sq * tangent_sq / (den * den * den);
    if (k2 != k3) {
        throw Error(ErrorCode::not_order_four,
                    "k2 = " + to_string(k2) + " differs from k3 = " + to_string(k3) + "; point is not of order 4");
    }
    if (k2 == 0 || k2 == 1)
        throw Error(ErrorCode::singular_image, "normalized curve E_k is singular (k = " + to_string(k2) + ")");
    return {k2, k1, x0, y0, curve.a1};
}

WeierstrassCurve x024_curve()
{
    return twist_x024(Rational(1));
}

WeierstrassCurve twist_x024(const Rational& k)
{
    if (k == 0)
        throw Error(ErrorCode::zero_twist, "quadratic twist by k = 0");
    return WeierstrassCurve{Rational(0), Rational(5 * k), Rational(0), Rational(4 * k * k), Rational(0)};
}

QuadExt quad_sqrt(const Rational& q)
{
    if (q == 0)
        return QuadExt();
    auto [d, m] = squarefree_decompose(q);
    return QuadExt(Rational(0), m, d);
}

QuadPointLift lift_twist_point(const Rational& k, const Rational& u, const Rational& v)
{
    WeierstrassCurve twist = twist_x024(k);
    if (!twist.contains(CurvePoint(u, v)))
        throw Error(ErrorCode::not_on_curve, "point is not on the quadratic twist");
    // V / k^{3/2} = V sqrt(k) / k^2
    QuadPointLift out{QuadExt(Rational(u / k)), QuadExt(Rational(v / (k * k))) * quad_sqrt(k)};
    return out;
}

std::vector<CurvePoint> search_points(const WeierstrassCurve& curve, unsigned long height_bound)
{
    std::vector<CurvePoint> out;
    const auto& [a1, a2, a3, a4, a6] = curve;
    for (const Rational& x : rationals_up_to_height(height_bound)) {
        Rational linear = a1 * x + a3;
        Rational disc = linear * linear + 4 * (((x + a2) * x + a4) * x + a6);
        auto root = rat_sqrt(disc);
        if (!root)
            continue;
        out.emplace_back(x, Rational((-linear - *root) / 2));
        if (*root != 0)
            out.emplace_back(x, Rational((-linear + *root) / 2));
    }
    return out;
}

} // namespace conicap
