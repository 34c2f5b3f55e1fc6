#pragma once

#include "conicap/quadext.hpp"
#include "conicap/rational.hpp"

#include <array>
#include <optional>

namespace conicap {

/// A x1^2 + 2B x1x2 + C x2^2 + 2D x1x0 + 2E x2x0 + F x0^2 = 0 in P^2.
struct Conic {
    Rational A, B, C, D, E, F;

    /// Throws Error{zero_conic} when all six coefficients vanish.
    static Conic make(Rational A, Rational B, Rational C, Rational D, Rational E, Rational F);

    /// Rows of the adjugate of [[A,B,D],[B,C,E],[D,E,F]].
    std::array<std::array<Rational, 3>, 3> adjugate() const;
    Rational determinant() const;

    /// Rank <= 2 (zero determinant). Progression construction refuses these.
    bool is_degenerate() const { return determinant() == 0; }

    Conic scaled(const Rational& lambda) const;

    friend bool operator==(const Conic&, const Conic&) = default;
};

/// l(x1:x2:x0) = (a x1 + b x2 + c x0) / (d x1 + e x2 + f x0).
struct LinFracMap {
    Rational a, b, c, d, e, f;

    /// Throws Error{invalid_map} when a row vanishes or the rows are proportional.
    static LinFracMap make(Rational a, Rational b, Rational c, Rational d, Rational e, Rational f);

    friend bool operator==(const LinFracMap&, const LinFracMap&) = default;
};

/// (x1 : x2 : x0) over Q(sqrt d). Equality is projective.
struct ProjPoint {
    QuadExt x1, x2, x0;

    /// Throws Error{invalid_input} when all coordinates vanish.
    static ProjPoint make(QuadExt x1, QuadExt x2, QuadExt x0);

    bool is_rational() const { return x1.is_rational() && x2.is_rational() && x0.is_rational(); }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q);
};

/// c0 + c1 t + c2 t^2.
struct QuadPoly {
    Rational c0, c1, c2;

    Rational operator()(const Rational& t) const { return c0 + t * (c1 + t * c2); }
    Rational derivative(const Rational& t) const { return c1 + 2 * c2 * t; }
    Rational second_derivative() const { return 2 * c2; }

    friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

enum class FiberSign { plus, minus };

enum class Reality { any, real };

/// Disc(t) = v^T adj(M) v with v = (a - d t, b - e t, c - f t).
QuadPoly disc_poly(const Conic& conic, const LinFracMap& map);

/// The fiber point of l over t, coordinates over Q(sqrt Disc(t)).
/// sign = plus takes +sqrt(Disc) in x1 and -sqrt(Disc) in x2.
/// Errors: negative_radicand (Reality::real and Disc(t) < 0);
/// degenerate_fiber (all three coordinates vanish).
ProjPoint point_at(const Conic& conic, const LinFracMap& map, const Rational& t,
                   FiberSign sign = FiberSign::plus, Reality reality = Reality::any);

/// nullopt is the point at infinity of P^1. Throws Error{indeterminate} for 0/0.
std::optional<QuadExt> eval_map(const LinFracMap& map, const ProjPoint& p);

bool on_conic(const Conic& conic, const ProjPoint& p);

/// det [ (a,b,c); (d,e,f); grad(p)/(d x1 + e x2 + f x0) ], where grad(p) = M p.
/// Equals +-sqrt(Disc(l(p))) for p on the conic.
/// Throws Error{division_by_zero} when the denominator of l vanishes at p.
QuadExt disc_via_determinant(const Conic& conic, const LinFracMap& map, const ProjPoint& p);

} // namespace conicap
