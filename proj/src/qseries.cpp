#include "conicap/qseries.hpp"

#include "conicap/error.hpp"

#include <algorithm>

namespace conicap {

QSeries::QSeries(int lead, std::vector<Rational> coeffs) : lead_(lead), coeffs_(std::move(coeffs)) {}

QSeries QSeries::constant(const Rational& c, int order)
{
    if (order < 1)
        throw Error(ErrorCode::invalid_input, "series order must be at least 1");
    std::vector<Rational> coeffs(static_cast<std::size_t>(order));
    coeffs[0] = c;
    return {0, std::move(coeffs)};
}

Rational QSeries::coeff(int exponent) const
{
    if (exponent >= precision())
        throw Error(ErrorCode::invalid_input, "coefficient of q^" + std::to_string(exponent) + " is past the truncation");
    if (exponent < lead_)
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(exponent - lead_)];
}

QSeries QSeries::normalized() const
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    if (first == coeffs_.end())
        return {precision(), {}};
    int shift = static_cast<int>(first - coeffs_.begin());
    return {lead_ + shift, std::vector<Rational>(first, coeffs_.end())};
}

QSeries QSeries::operator-() const
{
    QSeries out = *this;
    for (Rational& c : out.coeffs_)
        c = -c;
    return out;
}

namespace {

QSeries combine(const QSeries& a, const QSeries& b, int sign)
{
    int lead = std::min(a.lead(), b.lead());
    int prec = std::min(a.precision(), b.precision());
    std::vector<Rational> coeffs;
    for (int e = lead; e < prec; ++e)
        coeffs.push_back(sign > 0 ? Rational(a.coeff(e) + b.coeff(e)) : Rational(a.coeff(e) - b.coeff(e)));
    return {lead, std::move(coeffs)};
}

} // namespace

QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, 1); }

QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

QSeries operator*(const QSeries& a, const QSeries& b)
{
    std::size_t n = std::min(a.size(), b.size());
    std::vector<Rational> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return {a.lead_ + b.lead_, std::move(coeffs)};
}

QSeries operator*(const Rational& c, const QSeries& a)
{
    QSeries out = a;
    for (Rational& x : out.coeffs_)
        x *= c;
    return out;
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

QSeries QSeries::inverse() const
{
    QSeries s = normalized();
    if (s.coeffs_.empty())
        throw Error(ErrorCode::division_by_zero, "inverse of a series with no nonzero known coefficient");
    std::size_t n = s.size();
    std::vector<Rational> out(n);
    Rational lead_inv = 1 / s.coeffs_[0];
    out[0] = lead_inv;
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc;
        for (std::size_t i = 1; i <= m; ++i)
            acc += s.coeffs_[i] * out[m - i];
        out[m] = -acc * lead_inv;
    }
    return {-s.lead_, std::move(out)};
}

QSeries QSeries::pow(int exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    QSeries base = *this;
    QSeries acc = QSeries::constant(Rational(1), static_cast<int>(std::max<std::size_t>(size(), 1)));
    while (exponent > 0) {
        if (exponent & 1)
            acc = acc * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return acc;
}

std::optional<int> first_mismatch(const QSeries& a, const QSeries& b)
{
    int prec = std::min(a.precision(), b.precision());
    for (int e = std::min(a.lead(), b.lead()); e < prec; ++e) {
        if (a.coeff(e) != b.coeff(e))
            return e;
    }
    return std::nullopt;
}

Integer divisor_sum(long n, unsigned long alpha)
{
    if (n < 1)
        throw Error(ErrorCode::invalid_input, "divisor_sum needs n >= 1");
    Integer total;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), alpha);
        total += term;
        long other = n / d;
        if (other != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(other), alpha);
            total += term;
        }
    }
    return total;
}

namespace {

void require_order(int order)
{
    if (order < 1)
        throw Error(ErrorCode::invalid_input, "series order must be at least 1");
}

// prod_{n >= 1} (1 + sign q^(step n))^power, as a power series with `order` terms.
QSeries eta_like(int order, int step, int sign, int power)
{
    QSeries acc = QSeries::constant(Rational(1), order);
    for (int n = 1; step * n < order; ++n) {
        std::vector<Rational> factor(static_cast<std::size_t>(order));
        factor[0] = 1;
        factor[static_cast<std::size_t>(step * n)] = sign;
        acc = acc * QSeries(0, std::move(factor)).pow(power);
    }
    return acc;
}

// Multiplies a power series by q^-1 without losing a term.
QSeries shift_down(QSeries s) { return {s.lead() - 1, s.coeffs()}; }

} // namespace

QSeries k_series(int order)
{
    require_order(order);
    QSeries denom = eta_like(order, 1, 1, 8) * eta_like(order, 2, 1, 8);
    return shift_down(Rational(-1, 16) * denom.inverse());
}

QSeries r_series(int order)
{
    require_order(order);
    return shift_down(eta_like(order, 1, 1, 24).inverse());
}

QSeries j_series(int order)
{
    require_order(order);
    std::vector<Rational> eisenstein(static_cast<std::size_t>(order));
    eisenstein[0] = 1;
    for (int n = 1; n < order; ++n)
        eisenstein[static_cast<std::size_t>(n)] = Rational(240 * divisor_sum(n, 3));
    QSeries numerator = QSeries(0, std::move(eisenstein)).pow(3);
    return shift_down(numerator * eta_like(order, 1, -1, 24).inverse());
}

TowerReport verify_tower(const QSeries& k, const QSeries& r, const QSeries& j)
{
    int order = static_cast<int>(std::max({k.size(), r.size(), j.size()}));
    QSeries shifted = r + QSeries::constant(Rational(256), order);
    QSeries j_rhs = shifted.pow(3) * r.pow(-2);
    if (auto e = first_mismatch(j, j_rhs))
        return {false, "j = (r+256)^3/r^2", e};
    QSeries r_rhs = Rational(16) * k * k * (QSeries::constant(Rational(1), order) - k).inverse();
    if (auto e = first_mismatch(r, r_rhs))
        return {false, "r = 16k^2/(1-k)", e};
    return {};
}

TowerReport verify_tower(int order)
{
    if (order < 2)
        throw Error(ErrorCode::invalid_input, "verify_tower needs order >= 2");
    return verify_tower(k_series(order), r_series(order), j_series(order));
}

Rational r_of_k(const Rational& k)
{
    if (k == 1)
        throw Error(ErrorCode::division_by_zero, "r(k) has a pole at k = 1");
    return Rational(16 * k * k / (1 - k));
}

Rational j_of_r(const Rational& r)
{
    if (r == 0)
        throw Error(ErrorCode::division_by_zero, "j(r) has a pole at r = 0");
    Rational s = r + 256;
    return Rational(s * s * s / (r * r));
}

} // namespace conicap
