#pragma once

#include "conicap/rational.hpp"

#include <string>
#include <string_view>

namespace conicap {

/// Element a + b*sqrt(d) of Q(sqrt d), d a squarefree nonzero integer.
///
/// d = 1 stands for Q itself; the surd part is folded into the rational part
/// on construction. Negative d is allowed. An element with b = 0 is a
/// rational and combines with any radicand (it adopts the other operand's d);
/// two elements with nonzero surd parts must share d.
class QuadExt {
public:
    QuadExt() : radicand_(1) {}
    QuadExt(const Rational& a) : rat_(a), radicand_(1) {} // NOLINT: rational promotion
    QuadExt(long a) : rat_(a), radicand_(1) {}            // NOLINT
    QuadExt(const Rational& a, const Rational& b, const Integer& d);

    /// sqrt(d) itself; d must be squarefree.
    static QuadExt sqrt_of(const Integer& d);

    const Rational& rational_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    const Integer& radicand() const { return radicand_; }

    bool is_rational() const { return surd_ == 0; }
    bool is_zero() const { return rat_ == 0 && surd_ == 0; }

    /// a^2 - d b^2
    Rational norm() const;
    QuadExt conjugate() const;
    QuadExt inverse() const;
    QuadExt square() const { return *this * *this; }

    /// Throws Error{internal} unless is_rational().
    const Rational& as_rational() const;

    QuadExt operator-() const;
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y);
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

private:
    Rational rat_;
    Rational surd_;
    Integer radicand_;
};

enum class QuadOp { add, sub, mul, div };

QuadExt quadext_arith(const QuadExt& x, const QuadExt& y, QuadOp op);

/// "a + b*sqrt(d)", or just "a" for rational elements.
std::string to_string(const QuadExt& x);

/// Accepts "a", "a + b*sqrt(d)", "a - b*sqrt(d)" and "b*sqrt(d)".
QuadExt parse_quadext(std::string_view text);

} // namespace conicap
