#include "conicap/quadext.hpp"

#include "conicap/error.hpp"

#include <cctype>

namespace conicap {

namespace {

// Radicand for a binary operation; rationals adopt the other operand's d.
Integer common_radicand(const QuadExt& x, const QuadExt& y)
{
    if (x.is_rational())
        return y.radicand();
    if (y.is_rational())
        return x.radicand();
    if (x.radicand() != y.radicand()) {
        throw Error(ErrorCode::radicand_mismatch,
                    "cannot combine elements of Q(sqrt " + x.radicand().get_str() +
                        ") and Q(sqrt " + y.radicand().get_str() + ")");
    }
    return x.radicand();
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& d)
    : rat_(a), surd_(b), radicand_(d)
{
    if (d == 0 || !is_squarefree(d))
        throw Error(ErrorCode::invalid_input, "radicand must be a squarefree nonzero integer, got " + d.get_str());
    if (d == 1) {
        rat_ += surd_;
        surd_ = 0;
    }
}

QuadExt QuadExt::sqrt_of(const Integer& d)
{
    return QuadExt(Rational(0), Rational(1), d);
}

Rational QuadExt::norm() const
{
    return Rational(rat_ * rat_ - Rational(radicand_) * surd_ * surd_);
}

QuadExt QuadExt::conjugate() const
{
    QuadExt out = *this;
    out.surd_ = -surd_;
    return out;
}

QuadExt QuadExt::inverse() const
{
    Rational n = norm();
    if (n == 0)
        throw Error(ErrorCode::division_by_zero, "inverse of zero in Q(sqrt d)");
    QuadExt out = conjugate();
    out.rat_ /= n;
    out.surd_ /= n;
    return out;
}

const Rational& QuadExt::as_rational() const
{
    if (!is_rational())
        throw Error(ErrorCode::internal, "expected a rational value, got " + to_string(*this));
    return rat_;
}

QuadExt QuadExt::operator-() const
{
    QuadExt out = *this;
    out.rat_ = -rat_;
    out.surd_ = -surd_;
    return out;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y)
{
    QuadExt out;
    out.radicand_ = common_radicand(x, y);
    out.rat_ = x.rat_ + y.rat_;
    out.surd_ = x.surd_ + y.surd_;
    return out;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y)
{
    return x + (-y);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y)
{
    QuadExt out;
    out.radicand_ = common_radicand(x, y);
    out.rat_ = x.rat_ * y.rat_ + Rational(out.radicand_) * x.surd_ * y.surd_;
    out.surd_ = x.rat_ * y.surd_ + x.surd_ * y.rat_;
    return out;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y)
{
    common_radicand(x, y);
    return x * y.inverse();
}

bool operator==(const QuadExt& x, const QuadExt& y)
{
    if (x.rat_ != y.rat_ || x.surd_ != y.surd_)
        return false;
    return x.surd_ == 0 || x.radicand_ == y.radicand_;
}

QuadExt quadext_arith(const QuadExt& x, const QuadExt& y, QuadOp op)
{
    switch (op) {
    case QuadOp::add: return x + y;
    case QuadOp::sub: return x - y;
    case QuadOp::mul: return x * y;
    case QuadOp::div: return x / y;
    }
    throw Error(ErrorCode::internal, "unknown QuadOp");
}

std::string to_string(const QuadExt& x)
{
    if (x.is_rational())
        return to_string(x.rational_part());
    std::string surd = "sqrt(" + x.radicand().get_str() + ")";
    const Rational& b = x.surd_part();
    std::string coeff = (abs(b) == 1) ? surd : to_string(Rational(abs(b))) + "*" + surd;
    if (x.rational_part() == 0)
        return (sgn(b) < 0 ? "-" : "") + coeff;
    return to_string(x.rational_part()) + (sgn(b) < 0 ? " - " : " + ") + coeff;
}

QuadExt parse_quadext(std::string_view text)
{
    std::string_view s = trim(text);
    auto fail = [&]() -> QuadExt {
        throw Error(ErrorCode::invalid_input, "malformed quadratic-field element: '" + std::string(text) + "'");
    };
    auto pos = s.find("sqrt(");
    if (pos == std::string_view::npos)
        return QuadExt(parse_rational(s));
    if (s.back() != ')')
        return fail();
    Integer d;
    std::string_view d_text = trim(s.substr(pos + 5, s.size() - pos - 6));
    if (d_text.empty() || d.set_str(std::string(d_text), 10) != 0)
        return fail();

    // Everything before "sqrt(" is "[a (+|-)] [b*]".
    std::string_view head = trim(s.substr(0, pos));
    Rational b = 1;
    if (!head.empty() && head.back() == '*') {
        head = trim(head.substr(0, head.size() - 1));
        // split == 0 is the sign of b itself, e.g. "-5*sqrt(6)"
        auto split = head.find_last_of("+-");
        std::string_view b_text = head;
        std::string_view a_text;
        if (split != std::string_view::npos && split > 0) {
            a_text = trim(head.substr(0, split));
            b_text = trim(head.substr(split));
        }
        std::string b_str(b_text);
        if (!b_str.empty() && b_str.front() == '+')
            b_str.erase(0, 1);
        std::erase_if(b_str, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        b = parse_rational(b_str);
        Rational a = a_text.empty() ? Rational(0) : parse_rational(a_text);
        return QuadExt(a, b, d);
    }
    // "[a +|-] sqrt(d)"
    Rational a = 0;
    if (!head.empty()) {
        char sign = head.back();
        if (sign != '+' && sign != '-')
            return fail();
        b = sign == '-' ? -1 : 1;
        std::string_view a_text = trim(head.substr(0, head.size() - 1));
        if (!a_text.empty())
            a = parse_rational(a_text);
    }
    return QuadExt(a, b, d);
}

} // namespace conicap
