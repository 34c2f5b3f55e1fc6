#pragma once

#include "conicap/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conicap {

inline constexpr int default_series_order = 20;

/// Truncated Laurent series sum_{i < size} coeffs[i] q^(lead + i).
/// Known exactly through exponent precision() - 1.
class QSeries {
public:
    QSeries() = default;
    QSeries(int lead, std::vector<Rational> coeffs);

    /// c + O(q^order).
    static QSeries constant(const Rational& c, int order);

    int lead() const { return lead_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    int precision() const { return lead_ + static_cast<int>(coeffs_.size()); }

    /// Coefficient of q^exponent; zero below lead. Throws Error{invalid_input} at or past precision().
    Rational coeff(int exponent) const;

    /// Drops leading zero coefficients (each one lowers size by one).
    QSeries normalized() const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& a);
    friend QSeries operator/(const QSeries& a, const QSeries& b);

    /// Throws Error{division_by_zero} when every known coefficient is zero.
    QSeries inverse() const;
    /// Negative exponents go through inverse().
    QSeries pow(int exponent) const;

    /// Same lead, same coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    int lead_ = 0;
    std::vector<Rational> coeffs_;
};

/// First exponent below both precisions where a and b differ.
std::optional<int> first_mismatch(const QSeries& a, const QSeries& b);

/// sum_{d | n} d^alpha. Throws Error{invalid_input} for n < 1 or alpha < 0.
Integer divisor_sum(long n, unsigned long alpha);

/// -1/(16 q prod (1+q^n)^8 (1+q^2n)^8), `order` coefficients from q^-1.
QSeries k_series(int order = default_series_order);
/// 1/(q prod (1+q^n)^24).
QSeries r_series(int order = default_series_order);
/// (1 + 240 sum sigma_3(n) q^n)^3 / (q prod (1-q^n)^24).
QSeries j_series(int order = default_series_order);

struct TowerReport {
    bool ok = true;
    /// "j = (r+256)^3/r^2" or "r = 16k^2/(1-k)" for the first failing identity.
    std::string identity;
    std::optional<int> mismatch_exponent;
};

/// Checks j = (r + 256)^3 / r^2 and r = 16 k^2 / (1 - k) coefficientwise.
TowerReport verify_tower(int order = default_series_order);
TowerReport verify_tower(const QSeries& k, const QSeries& r, const QSeries& j);

/// 16k^2/(1 - k). Throws Error{division_by_zero} at k = 1.
Rational r_of_k(const Rational& k);
/// (r + 256)^3 / r^2. Throws Error{division_by_zero} at r = 0.
Rational j_of_r(const Rational& r);

} // namespace conicap
