#pragma once

#include "conicap/conic.hpp"
#include "conicap/curve.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace conicap {

/// k = (Disc'^2 - 2 Disc Disc'') / Disc'^2 at t0.
/// Errors: disc_zero (Disc(t0) = 0), disc_derivative_zero (Disc'(t0) = 0).
Rational modulus_k(const QuadPoly& disc, const Rational& t0);

/// c_n = Disc^(n)(t) / (n! Disc(t)), so Disc(t + delta)/Disc(t) = 1 + c1 delta + c2 delta^2.
struct TaylorRatios {
    Rational c1, c2;
};

/// Throws Error{disc_zero} when Disc(t) = 0.
TaylorRatios taylor_ratios(const QuadPoly& disc, const Rational& t);

/// Everything the construction needs from (conic, map, t0).
struct ProgressionSeed {
    Conic conic;
    LinFracMap map;
    Rational t0;
    QuadPoly disc;
    Rational sqrt_disc_t0;
    Rational k;

    /// k = 1: points come from the nodal cubic (singular_param), not from an elliptic E_k.
    bool is_singular() const { return k == 1; }
    WeierstrassCurve cubic() const { return ek_model(k); }
};

/// Errors, each distinct: degenerate_conic, disc_not_square, disc_zero,
/// disc_derivative_zero, k_zero.
ProgressionSeed make_seed(const Conic& conic, const LinFracMap& map, const Rational& t0);

/// delta = -(Disc(t0)/Disc'(t0)) * 4XY / (Y^2 + 2XY + k X^2).
/// Returns 0 for the trivial orbit (infinity, or XY = 0).
/// Throws Error{division_by_zero} when XY != 0 and the denominator vanishes.
Rational common_difference(const QuadPoly& disc, const Rational& t0, const Rational& k, const CurvePoint& p);

struct ApTriple {
    std::array<ProjPoint, 3> points;
    Rational delta;
    std::array<Rational, 3> t_values; // t0 - delta, t0, t0 + delta
};

/// Errors: not_on_curve; trivial_progression (delta = 0); disc_not_square
/// (never expected); degenerate_fiber from point_at.
ApTriple three_term_ap(const ProgressionSeed& seed, const CurvePoint& p, FiberSign sign = FiberSign::plus);

/// t + delta with delta = (c1 - 2u)/(u^2 - c2). Errors: disc_zero; excluded_locus (u^2 = c2).
Rational extend_sequence(const QuadPoly& disc, const Rational& t, const Rational& u);

/// Iterates extend_sequence over a list of slopes starting at t (t included first).
std::vector<Rational> extend_sequence_chain(const QuadPoly& disc, const Rational& t, std::span<const Rational> slopes);

struct SlopePair {
    Rational u, v;
    friend bool operator==(const SlopePair&, const SlopePair&) = default;
};

/// u = (r_plus - r0)/(delta r0), v = (r_minus - r0)/(delta r0) for chosen roots
/// r0 = sqrt Disc(t), r_plus = sqrt Disc(t + delta), r_minus = sqrt Disc(t - delta).
SlopePair slope_pair(const Rational& delta, const Rational& r0, const Rational& r_plus, const Rational& r_minus);

/// X = 2k c1/(v - u - c1), Y = 2k(2u - c1)/(v - u - c1). Error: excluded_locus.
CurvePoint uv_to_xy(const Rational& k, const Rational& c1, const SlopePair& pair);

/// u = c1 (Y + X)/(2X), v = c1 (Y + 3X + 4k)/(2X). Error: excluded_locus (X = 0 or infinity).
SlopePair xy_to_uv(const Rational& k, const Rational& c1, const CurvePoint& p);

/// ((delta v + 1)/(delta u + 1))^2 == (1 - c1 delta + c2 delta^2)/(1 + c1 delta + c2 delta^2).
bool quartic_identity_holds(const TaylorRatios& c, const Rational& delta, const SlopePair& pair);

/// sigma(P) = (0,0) + P: X -> -4kY/X^2, Y -> 4k^2(X^2 - 4Y)/X^3 when X != 0.
CurvePoint sigma_action(const Rational& k, const CurvePoint& p);
/// tau(P) = -P: Y -> -Y - 4X - 4k.
CurvePoint tau_action(const Rational& k, const CurvePoint& p);

/// Point of the nodal k = 1 cubic Y^2 + 4XY + 4Y = X^3 + X^2 on the line
/// Y + 3X + 4 + t(Y + X) = 0 through the node (-2, 2):
/// X = -4t/(t+1)^2, Y = 4(t-1)/(t+1)^3. Error: excluded_locus (t = -1).
CurvePoint singular_param(const Rational& t);
/// t = -(Y + 3X + 4)/(Y + X). Error: excluded_locus.
Rational singular_param_inverse(const CurvePoint& p);

/// ((t^2 - 2t - 1)^2 : (t^2 + 1)^2 : (t^2 + 2t - 1)^2).
std::array<Rational, 3> three_squares_param(const Rational& t);
/// t = (x1 - x3)/(x1 - 2 x2 + x3). Error: excluded_locus.
Rational three_squares_recover(const Rational& x1, const Rational& x2, const Rational& x3);

struct Triangle {
    Rational a, b, c;
    Rational cos_theta;
};

// Congruum correspondences for squares x1^2, x2^2, x3^2 with common difference delta.
CurvePoint congruum_ap_to_curve(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& delta);
std::array<Rational, 3> congruum_curve_to_ap(const CurvePoint& p, const Rational& delta);
Triangle congruum_curve_to_triangle(const CurvePoint& p, const Rational& delta);
CurvePoint congruum_triangle_to_curve(const Triangle& tri, const Rational& delta);
/// Y^2 = X^3 - delta^2 X.
WeierstrassCurve congruum_curve(const Rational& delta);

/// (X, Y) on Y^2 = X^3 + 5X^2 + 4X from (x1 : x2 : x3 : x4), via the linear forms
/// 2(x1 - 3x2 - 3x3 + x4), 6(x1 - x2 + x3 - x4), x1 + 3x2 + 3x3 + x4.
/// The projection centre (-1 : -1 : 1 : 1) goes to its tangent limit (0, 0).
/// Error: excluded_locus when the forms vanish at a point other than the centre.
CurvePoint four_squares_to_curve(const std::array<Rational, 4>& x);
/// Ratios (x1 : x2 : x3 : x4) for a point of Y^2 = X^3 + 5X^2 + 4X.
std::array<Rational, 4> four_squares_from_curve(const CurvePoint& p);

/// Four squares in arithmetic progression over Q(sqrt k) from (U, V) on the k-twist:
/// y1 = (3kU(2k + U) - sqrt(k) V (2k - U))^2, y2 = (kU(2k - U) - sqrt(k) V (2k + U))^2,
/// y3, y4 with the surd sign flipped. Errors: not_on_curve, excluded_locus (V = 0).
std::array<QuadExt, 4> four_squares_from_twist(const Rational& k, const Rational& u, const Rational& v);
/// The square roots of the above, in order.
std::array<QuadExt, 4> four_roots_from_twist(const Rational& k, const Rational& u, const Rational& v);

/// Common difference if the squares of `roots` form an arithmetic progression.
std::optional<QuadExt> square_progression_difference(std::span<const QuadExt> roots);

/// gapA = Disc(t) - Disc(t - delta), gapB = Disc(t + delta) - Disc(t), gapC = gapA + gapB.
struct FreyTriple {
    Rational gap_a, gap_b, gap_c;
    friend bool operator==(const FreyTriple&, const FreyTriple&) = default;
};

/// Difference form.
FreyTriple frey_quantities(const QuadPoly& disc, const Rational& t, const Rational& delta);
/// Closed form through Disc'(t) and Disc''.
FreyTriple frey_quantities_taylor(const QuadPoly& disc, const Rational& t, const Rational& delta);

/// Y^2 = X (X - A)(X + B).
WeierstrassCurve frey_curve(const FreyTriple& gaps);
/// X = AB(x1 - x3)/(Bx1 - Cx2 + Ax3), Y = -ABC/(Bx1 - Cx2 + Ax3).
CurvePoint frey_ap_to_curve(const Rational& x1, const Rational& x2, const Rational& x3, const FreyTriple& gaps);
std::array<Rational, 3> frey_curve_to_ap(const CurvePoint& p, const FreyTriple& gaps);
/// a = (X^2 + (B - A)X - AB)/Y, b = CX/Y, c = (X^2 + AB)/Y, cos theta = (B - A)/C.
Triangle frey_curve_to_triangle(const CurvePoint& p, const FreyTriple& gaps);
CurvePoint frey_triangle_to_curve(const Triangle& tri, const FreyTriple& gaps);

/// a^2 - 2ab cos(theta) + b^2 == c^2.
bool triangle_law_holds(const Triangle& tri);
/// (ab)^2 (1 - cos^2 theta) == 4AB, the squared area relation.
bool squared_area_holds(const Triangle& tri, const FreyTriple& gaps);

} // namespace conicap
