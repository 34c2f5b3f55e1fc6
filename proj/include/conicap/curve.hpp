#pragma once

#include "conicap/quadext.hpp"
#include "conicap/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace conicap {

/// Affine point or the point at infinity (the group identity).
class CurvePoint {
public:
    CurvePoint() = default; // infinity
    CurvePoint(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)), infinite_(false) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return infinite_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    friend bool operator==(const CurvePoint& p, const CurvePoint& q)
    {
        if (p.infinite_ || q.infinite_)
            return p.infinite_ == q.infinite_;
        return p.x_ == q.x_ && p.y_ == q.y_;
    }

    /// Orders infinity first, then by (x, y); used for deterministic output.
    friend bool operator<(const CurvePoint& p, const CurvePoint& q);

private:
    Rational x_;
    Rational y_;
    bool infinite_ = true;
};

/// Substitution x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct WeierstrassChange {
    Rational u = 1, r = 0, s = 0, t = 0;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const { return a1 * a1 + 4 * a2; }
    Rational b4() const { return a1 * a3 + 2 * a4; }
    Rational b6() const { return a3 * a3 + 4 * a6; }
    Rational b8() const
    {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    Rational c4() const;
    Rational discriminant() const;
    bool is_elliptic() const { return discriminant() != 0; }

    /// c4^3 / discriminant; throws Error{singular_curve} when singular.
    Rational j_invariant() const;

    bool contains(const CurvePoint& p) const;
    /// Membership for a point with coordinates in Q(sqrt d).
    bool contains(const QuadExt& x, const QuadExt& y) const;

    /// The model in the primed coordinates of the change.
    WeierstrassCurve changed(const WeierstrassChange& change) const;
    /// Image of a point of this model in the primed coordinates.
    CurvePoint change_point(const WeierstrassChange& change, const CurvePoint& p) const;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

CurvePoint negate(const WeierstrassCurve& curve, const CurvePoint& p);

/// Chord-tangent group law on the long model. Throws Error{not_on_curve}.
CurvePoint add(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);

CurvePoint mul(const WeierstrassCurve& curve, long n, const CurvePoint& p);

inline constexpr int max_tested_order = 12;

/// Order of p if it is at most 12, nullopt otherwise (larger or infinite).
std::optional<int> order(const WeierstrassCurve& curve, const CurvePoint& p);

/// Y^2 + 4XY + 4kY = X^3 + kX^2, elliptic exactly when k is not 0 or 1.
class EkCurve {
public:
    /// Throws Error{singular_curve} for k in {0, 1}.
    explicit EkCurve(Rational k);

    const Rational& k() const { return k_; }
    const WeierstrassCurve& curve() const { return curve_; }
    static CurvePoint torsion_generator() { return {Rational(0), Rational(0)}; }

private:
    Rational k_;
    WeierstrassCurve curve_;
};

/// E_k coefficients without the smoothness check (k = 1 gives the nodal cubic).
WeierstrassCurve ek_model(const Rational& k);

/// [4](0:0:1) on Y^2 + 4XY + 4k3 Y = X^3 + k2 X^2 as a projective triple.
/// Throws Error{singular_curve} when that curve is singular.
std::array<Rational, 3> four_mult_formula(const Rational& k2, const Rational& k3);

struct FourTorsionNormalization {
    Rational k;
    Rational k1;
    Rational x0, y0; // the order-4 point being moved to (0,0)
    Rational a1;     // of the source model

    /// X = 16 k1^2 (x - x0), Y = 64 k1^3 (y - y0) + 32 k1^2 (a1 k1 - 1)(x - x0).
    CurvePoint apply(const CurvePoint& p) const;
};

/// Moves an order-4 point P to (0,0) on E_k.
/// Errors: not_on_curve; not_order_four (2-torsion denominator, or k2 != k3);
/// singular_image (k in {0, 1}).
FourTorsionNormalization normalize_four_torsion(const WeierstrassCurve& curve, const CurvePoint& p);

/// Y^2 = X^3 + 5X^2 + 4X.
WeierstrassCurve x024_curve();

/// Y^2 = X^3 + 5k X^2 + 4k^2 X. Throws Error{zero_twist} for k = 0.
WeierstrassCurve twist_x024(const Rational& k);

struct QuadPointLift {
    QuadExt x, y;
};

/// (U, V) on the k-twist goes to (U/k, V/k^{3/2}) on Y^2 = X^3 + 5X^2 + 4X
/// over Q(sqrt k). Throws Error{not_on_curve} or Error{zero_twist}.
QuadPointLift lift_twist_point(const Rational& k, const Rational& u, const Rational& v);

/// sqrt(q) as an element of Q(sqrt d) with d the squarefree part of q.
QuadExt quad_sqrt(const Rational& q);

/// Affine points with height(x) <= bound, ordered by height of x, then x, then y.
std::vector<CurvePoint> search_points(const WeierstrassCurve& curve, unsigned long height_bound);

} // namespace conicap
