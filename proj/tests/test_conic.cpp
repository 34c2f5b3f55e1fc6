#include "conicap/conic.hpp"
#include "conicap/error.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace conicap;
using oracle::q;

namespace {

Conic parabola() { return Conic::make(q(1), q(0), q(0), q(0), q(-1, 2), q(0)); }
Conic circle25() { return Conic::make(q(1), q(0), q(1), q(0), q(0), q(-25)); }
LinFracMap ell_y() { return LinFracMap::make(q(0), q(1), q(0), q(0), q(0), q(1)); }
LinFracMap ell_x() { return LinFracMap::make(q(1), q(0), q(0), q(0), q(0), q(1)); }

ProjPoint rp(long a, long b, long c) { return ProjPoint::make(QuadExt(a), QuadExt(b), QuadExt(c)); }

// The quadratic form written out term by term.
QuadExt form(const Conic& c, const ProjPoint& p)
{
    return QuadExt(c.A) * p.x1 * p.x1 + QuadExt(2 * c.B) * p.x1 * p.x2 + QuadExt(c.C) * p.x2 * p.x2
           + QuadExt(2 * c.D) * p.x1 * p.x0 + QuadExt(2 * c.E) * p.x2 * p.x0 + QuadExt(c.F) * p.x0 * p.x0;
}

// l(p) == t by cross multiplication.
bool maps_to(const LinFracMap& m, const ProjPoint& p, const Rational& t)
{
    QuadExt num = QuadExt(m.a) * p.x1 + QuadExt(m.b) * p.x2 + QuadExt(m.c) * p.x0;
    QuadExt den = QuadExt(m.d) * p.x1 + QuadExt(m.e) * p.x2 + QuadExt(m.f) * p.x0;
    return !den.is_zero() && num == QuadExt(t) * den;
}

} // namespace

TEST_CASE("constructors validate")
{
    CHECK_THROWS_AS(Conic::make(q(0), q(0), q(0), q(0), q(0), q(0)), Error);
    CHECK_THROWS_AS(LinFracMap::make(q(1), q(2), q(3), q(2), q(4), q(6)), Error);
    CHECK_THROWS_AS(LinFracMap::make(q(0), q(0), q(0), q(0), q(0), q(1)), Error);
    CHECK_THROWS_AS(ProjPoint::make(QuadExt(0), QuadExt(0), QuadExt(0)), Error);
    try {
        LinFracMap::make(q(1), q(2), q(3), q(2), q(4), q(6));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_map);
    }
}

TEST_CASE("degeneracy")
{
    CHECK_FALSE(parabola().is_degenerate());
    CHECK_FALSE(circle25().is_degenerate());
    // x1^2 - x2^2: a line pair.
    CHECK(Conic::make(q(1), q(0), q(-1), q(0), q(0), q(0)).is_degenerate());
}

TEST_CASE("disc_poly examples")
{
    CHECK(disc_poly(parabola(), ell_y()) == QuadPoly{q(0), q(1), q(0)});
    CHECK(disc_poly(circle25(), ell_x()) == QuadPoly{q(25), q(0), q(-1)});
}

TEST_CASE("disc_poly square test agrees with a direct fiber solve on the circle")
{
    QuadPoly d = disc_poly(circle25(), ell_x());
    for (const Rational& t : rationals_up_to_height(40)) {
        bool fiber_rational = oracle::is_square(Rational(25 - t * t));
        CHECK(is_rational_square(d(t)) == fiber_rational);
    }
}

TEST_CASE("point_at examples")
{
    CHECK(point_at(parabola(), ell_y(), q(25), FiberSign::plus) == rp(5, 25, 1));
    CHECK(point_at(parabola(), ell_y(), q(25), FiberSign::minus) == rp(-5, 25, 1));
    ProjPoint c = point_at(circle25(), ell_x(), q(3));
    CHECK((c == rp(3, 4, 1) || c == rp(3, -4, 1)));
    ProjPoint root2 = point_at(parabola(), ell_y(), q(2));
    CHECK_FALSE(root2.is_rational());
    CHECK(root2 == ProjPoint::make(QuadExt::sqrt_of(2), QuadExt(2), QuadExt(1)));
}

TEST_CASE("point_at refuses imaginary fibers in real mode")
{
    try {
        point_at(circle25(), ell_x(), q(6), FiberSign::plus, Reality::real);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::negative_radicand);
    }
    ProjPoint p = point_at(circle25(), ell_x(), q(6));
    CHECK_FALSE(p.is_rational());
    CHECK(form(circle25(), p).is_zero());
}

TEST_CASE("eval_map and on_conic")
{
    CHECK(eval_map(ell_y(), rp(7, 49, 1)) == QuadExt(49));
    CHECK_FALSE(eval_map(ell_y(), rp(0, 1, 0)).has_value());
    CHECK(eval_map(ell_x(), rp(3, 4, 1)) == QuadExt(3));
    CHECK_THROWS_AS(eval_map(LinFracMap::make(q(1), q(0), q(0), q(0), q(1), q(0)), rp(0, 0, 1)), Error);
    CHECK(on_conic(parabola(), rp(1, 1, 1)));
    CHECK_FALSE(on_conic(parabola(), rp(1, 2, 1)));
    CHECK(on_conic(circle25(), rp(3, 4, 1)));
    CHECK(on_conic(circle25(), rp(6, 8, 2)));
}

TEST_CASE("disc_via_determinant examples")
{
    QuadExt a = disc_via_determinant(parabola(), ell_y(), rp(5, 25, 1));
    CHECK((a == QuadExt(5) || a == QuadExt(-5)));
    CHECK(a * a == QuadExt(25));
    QuadExt b = disc_via_determinant(circle25(), ell_x(), rp(3, 4, 1));
    CHECK((b == QuadExt(4) || b == QuadExt(-4)));
    CHECK(disc_via_determinant(circle25(), ell_x(), rp(5, 0, 1)).is_zero());
}

TEST_CASE("random conics: fiber points lie on the conic over t")
{
    std::mt19937_64 rng(20240601);
    int checked = 0;
    while (checked < 1000) {
        Conic c{oracle::random_rational(rng, 5), oracle::random_rational(rng, 5), oracle::random_rational(rng, 5),
                oracle::random_rational(rng, 5), oracle::random_rational(rng, 5), oracle::random_rational(rng, 5)};
        if (c.is_degenerate())
            continue;
        LinFracMap m;
        try {
            m = LinFracMap::make(oracle::random_rational(rng, 4), oracle::random_rational(rng, 4),
                                 oracle::random_rational(rng, 4), oracle::random_rational(rng, 4),
                                 oracle::random_rational(rng, 4), oracle::random_rational(rng, 4));
        } catch (const Error&) {
            continue;
        }
        Rational t = oracle::random_rational(rng, 6);
        QuadPoly d = disc_poly(c, m);
        for (FiberSign s : {FiberSign::plus, FiberSign::minus}) {
            ProjPoint p;
            try {
                p = point_at(c, m, t, s);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::degenerate_fiber);
                continue;
            }
            ++checked;
            REQUIRE(form(c, p).is_zero());
            REQUIRE(on_conic(c, p));
            // The map can be 0/0 at a base point of the pencil; skip those.
            QuadExt den = QuadExt(m.d) * p.x1 + QuadExt(m.e) * p.x2 + QuadExt(m.f) * p.x0;
            if (den.is_zero())
                continue;
            REQUIRE(maps_to(m, p, t));
            QuadExt r = disc_via_determinant(c, m, p);
            REQUIRE(r * r == QuadExt(d(t)));
        }
        bool same = false;
        try {
            same = point_at(c, m, t, FiberSign::plus) == point_at(c, m, t, FiberSign::minus);
        } catch (const Error&) {
            continue;
        }
        CHECK(same == (d(t) == 0));
    }
}

TEST_CASE("rescaling the conic scales Disc by lambda^2")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        Conic c{oracle::random_rational(rng, 6), oracle::random_rational(rng, 6), oracle::random_rational(rng, 6),
                oracle::random_rational(rng, 6), oracle::random_rational(rng, 6), oracle::random_rational(rng, 6)};
        Rational lambda = oracle::random_nonzero(rng, 9);
        LinFracMap m = ell_x();
        QuadPoly d = disc_poly(c, m);
        QuadPoly e = disc_poly(c.scaled(lambda), m);
        Rational l2 = lambda * lambda;
        CHECK(e == QuadPoly{Rational(l2 * d.c0), Rational(l2 * d.c1), Rational(l2 * d.c2)});
    }
}

TEST_CASE("rational fibers are invariant under rescaling (grid of t)")
{
    Conic c = circle25();
    for (const Rational& lambda : {q(4), q(1, 9), q(-9)}) {
        QuadPoly d = disc_poly(c, ell_x());
        QuadPoly e = disc_poly(c.scaled(lambda), ell_x());
        for (const Rational& t : rationals_up_to_height(15))
            CHECK(is_rational_square(d(t)) == is_rational_square(e(t)));
    }
}
