#include "conicap/rational.hpp"

#include "conicap/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace conicap {

namespace {

constexpr unsigned long trial_division_limit = 1UL << 16;

bool parse_integer(std::string_view text, Integer& out)
{
    if (text.empty())
        return false;
    std::size_t start = text.front() == '-' ? 1 : 0;
    if (start == text.size())
        return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            return false;
    }
    return out.set_str(std::string(text), 10) == 0;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_integer(text, num);
    } else {
        auto den_text = text.substr(slash + 1);
        ok = parse_integer(text.substr(0, slash), num) && !den_text.empty() &&
             den_text.front() != '-' && parse_integer(den_text, den);
    }
    if (!ok)
        throw Error(ErrorCode::invalid_input, "malformed rational: '" + std::string(text) + "'");
    if (den == 0)
        throw Error(ErrorCode::invalid_input, "zero denominator: '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Integer> int_sqrt_exact(const Integer& n)
{
    if (sgn(n) < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<Rational> rat_sqrt(const Rational& q)
{
    auto num = int_sqrt_exact(q.get_num());
    if (!num)
        return std::nullopt;
    auto den = int_sqrt_exact(q.get_den());
    if (!den)
        return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

bool is_rational_square(const Rational& q)
{
    return rat_sqrt(q).has_value();
}

SquarefreeDecomposition squarefree_decompose(const Integer& n)
{
    if (n == 0)
        throw Error(ErrorCode::zero_input, "squarefree decomposition of zero");
    Integer rest = abs(n);
    Integer square_root_part = 1;
    Integer radicand = sgn(n) < 0 ? -1 : 1;

    auto strip = [&](unsigned long p) {
        unsigned exponent = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++exponent;
        }
        for (unsigned i = 0; i + 1 < exponent; i += 2)
            square_root_part *= p;
        if (exponent % 2 == 1)
            radicand *= p;
    };

    strip(2);
    for (unsigned long p = 3; p <= trial_division_limit; p += 2) {
        if (Integer(p) * p > rest)
            break;
        strip(p);
    }
    if (rest > 1) {
        if (auto root = int_sqrt_exact(rest))
            square_root_part *= *root;
        else
            radicand *= rest;
    }
    return {radicand, Rational(square_root_part)};
}

SquarefreeDecomposition squarefree_decompose(const Rational& q)
{
    if (q == 0)
        throw Error(ErrorCode::zero_input, "squarefree decomposition of zero");
    // p/q = (p*q) / q^2
    auto inner = squarefree_decompose(Integer(q.get_num() * q.get_den()));
    Rational m = inner.multiplier / Rational(q.get_den());
    m.canonicalize();
    return {inner.radicand, m};
}

bool is_squarefree(const Integer& n)
{
    if (n == 0)
        return false;
    return squarefree_decompose(n).multiplier == 1;
}

Integer height(const Rational& q)
{
    Integer p = abs(q.get_num());
    return p > q.get_den() ? p : Integer(q.get_den());
}

std::vector<Rational> rationals_up_to_height(unsigned long bound)
{
    std::vector<Rational> out;
    out.emplace_back(0);
    for (unsigned long h = 1; h <= bound; ++h) {
        std::vector<Rational> level;
        // denominator h, |numerator| <= h
        for (unsigned long p = 0; p <= h; ++p) {
            if (std::gcd(p, h) != 1)
                continue;
            if (p == 0)
                continue;
            level.emplace_back(Integer(p), Integer(h));
            level.emplace_back(-Integer(p), Integer(h));
        }
        // |numerator| h, denominator < h
        for (unsigned long q = 1; q < h; ++q) {
            if (std::gcd(h, q) != 1)
                continue;
            level.emplace_back(Integer(h), Integer(q));
            level.emplace_back(-Integer(h), Integer(q));
        }
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace conicap
