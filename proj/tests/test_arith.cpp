#include "conicap/error.hpp"
#include "conicap/quadext.hpp"
#include "conicap/rational.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace conicap;
using oracle::q;

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == q(-3, 2));
    CHECK(parse_rational("0/7") == 0);
}

TEST_CASE("parse_rational rejects malformed text")
{
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "2x", "1//2", " 3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), Error);
    }
    try {
        parse_rational("4/0");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_input);
    }
}

TEST_CASE("to_string")
{
    CHECK(to_string(q(7, 2)) == "7/2");
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(to_string(q(0)) == "0");
}

TEST_CASE("rat_sqrt")
{
    CHECK(rat_sqrt(q(49, 4)) == q(7, 2));
    CHECK(rat_sqrt(q(0)) == q(0));
    CHECK_FALSE(rat_sqrt(q(2)).has_value());
    CHECK_FALSE(rat_sqrt(q(-4)).has_value());
    CHECK_FALSE(rat_sqrt(q(9, 2)).has_value());
    CHECK(int_sqrt_exact(Integer(144)) == Integer(12));
    CHECK_FALSE(int_sqrt_exact(Integer(145)).has_value());
}

TEST_CASE("squarefree_decompose examples")
{
    auto a = squarefree_decompose(q(25));
    CHECK(a.radicand == 1);
    CHECK(a.multiplier == 5);
    auto b = squarefree_decompose(q(24));
    CHECK(b.radicand == 6);
    CHECK(b.multiplier == 2);
    auto c = squarefree_decompose(q(-9, 4));
    CHECK(c.radicand == -1);
    CHECK(c.multiplier == q(3, 2));
    CHECK_THROWS_AS(squarefree_decompose(q(0)), Error);
}

TEST_CASE("squarefree_decompose against trial division")
{
    for (long n = -3000; n <= 3000; ++n) {
        if (n == 0)
            continue;
        CAPTURE(n);
        auto d = squarefree_decompose(Integer(n));
        REQUIRE(d.radicand == oracle::squarefree_part(n));
        CHECK(d.multiplier * d.multiplier * d.radicand == n);
    }
}

TEST_CASE("squarefree_decompose with a large prime square")
{
    Integer p = 1000003;
    auto d = squarefree_decompose(Integer(p * p * 7));
    CHECK(d.radicand == 7);
    CHECK(d.multiplier == Rational(p));
}

TEST_CASE("height and enumeration")
{
    CHECK(height(q(-7, 3)) == 7);
    CHECK(height(q(2, 9)) == 9);
    auto all = rationals_up_to_height(3);
    // 0, +-1, +-2, +-1/2, +-3, +-1/3, +-3/2, +-2/3
    CHECK(all.size() == 15);
    CHECK(all.front() == 0);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(height(all[i - 1]) <= height(all[i]));
}

TEST_CASE("QuadExt examples")
{
    QuadExt r6 = QuadExt::sqrt_of(6);
    QuadExt a = QuadExt(9) - QuadExt(5) * r6;
    QuadExt b = QuadExt(9) + QuadExt(5) * r6;
    CHECK(a * b == QuadExt(-69));
    CHECK(quadext_arith(a, b, QuadOp::mul) == QuadExt(-69));
    CHECK(a.norm() == -69);
    CHECK(quadext_arith(QuadExt(q(1), q(0), 6), QuadExt(q(1), q(0), 6), QuadOp::div) == QuadExt(1));
    CHECK((QuadExt(15) - r6) + (QuadExt(15) + r6) == QuadExt(30));
    CHECK(quadext_arith(QuadExt(15) + r6, r6, QuadOp::sub) == QuadExt(15));
}

TEST_CASE("QuadExt errors")
{
    CHECK_THROWS_AS(QuadExt(q(1), q(1), 8), Error);
    CHECK_THROWS_AS(QuadExt(q(1), q(1), 0), Error);
    try {
        (void)(QuadExt::sqrt_of(2) + QuadExt::sqrt_of(3));
        FAIL("expected radicand mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::radicand_mismatch);
    }
    CHECK_THROWS_AS(QuadExt(0).inverse(), Error);
    CHECK(QuadExt::sqrt_of(-1) * QuadExt::sqrt_of(-1) == QuadExt(-1));
}

TEST_CASE("QuadExt printing and parsing")
{
    QuadExt r6 = QuadExt::sqrt_of(6);
    QuadExt x = QuadExt(q(9)) - QuadExt(5) * r6;
    CHECK(to_string(x) == "9 - 5*sqrt(6)");
    CHECK(to_string(QuadExt(q(-1, 2))) == "-1/2");
    CHECK(to_string(r6) == "sqrt(6)");
    for (const char* text : {"9 - 5*sqrt(6)", "sqrt(409)", "-3/4 + 2/3*sqrt(-7)", "12", "-sqrt(2)"})
        CHECK(to_string(parse_quadext(text)) == text);
    CHECK_THROWS_AS(parse_quadext("1 + sqrt(4)"), Error);
    CHECK_THROWS_AS(parse_quadext("1 + "), Error);
}
