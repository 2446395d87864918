#ifndef CPN_SERIES_HPP
#define CPN_SERIES_HPP

// Univariate formal power series over the rationals, known modulo x^{order+1}.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpn/rational.hpp"

namespace cpn {

inline constexpr std::size_t default_series_order = 64;

class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = default_series_order) : coeffs_(order + 1) {}

    // Missing trailing coefficients are zero; extra ones are an error.
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() > order + 1)
            throw std::invalid_argument("more coefficients than the series order allows");
        coeffs_.resize(order + 1);
    }

    static TruncatedSeries constant(std::size_t order, const Rational &c)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    // c * x^k (zero if k exceeds the order).
    static TruncatedSeries monomial(std::size_t order, std::size_t k, const Rational &c = 1)
    {
        TruncatedSeries s(order);
        if (k <= order)
            s.coeffs_[k] = c;
        return s;
    }

    static TruncatedSeries variable(std::size_t order) { return monomial(order, 1); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

    const Rational &coeff(std::size_t k) const
    {
        if (k > order())
            throw std::out_of_range("coefficient index " + std::to_string(k) + " beyond series order " +
                                    std::to_string(order()));
        return coeffs_[k];
    }

    Rational &operator[](std::size_t k) { return coeffs_[k]; }
    const Rational &operator[](std::size_t k) const { return coeffs_[k]; }

    // Index of the first nonzero coefficient, if any is stored.
    std::optional<std::size_t> valuation() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0)
                return k;
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    TruncatedSeries truncate(std::size_t new_order) const
    {
        if (new_order > order())
            throw std::invalid_argument("cannot extend a truncated series to a higher order");
        return TruncatedSeries(new_order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        require_same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        require_same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        return *this;
    }

    TruncatedSeries &operator*=(const Rational &c)
    {
        for (auto &a : coeffs_)
            a *= c;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational &c) { return a *= c; }
    friend TruncatedSeries operator*(const Rational &c, TruncatedSeries a) { return a *= c; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.require_same_order(b);
        const std::size_t n = a.order();
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    TruncatedSeries &operator*=(const TruncatedSeries &o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) = default;

    void require_same_order(const TruncatedSeries &o) const
    {
        if (order() != o.order())
            throw std::invalid_argument("mismatched series orders " + std::to_string(order()) + " and " +
                                        std::to_string(o.order()));
    }

private:
    std::vector<Rational> coeffs_;
};

// Explicit re-truncation of both operands to the smaller order.
inline std::pair<TruncatedSeries, TruncatedSeries> common_order(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t m = std::min(a.order(), b.order());
    return {a.truncate(m), b.truncate(m)};
}

inline TruncatedSeries pow(const TruncatedSeries &a, unsigned e)
{
    TruncatedSeries result = TruncatedSeries::constant(a.order(), 1);
    TruncatedSeries base = a;
    while (e != 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e != 0)
            base *= base;
    }
    return result;
}

// exp(a) for a with zero constant term, via k e_k = sum_j j a_j e_{k-j}.
inline TruncatedSeries exp(const TruncatedSeries &a)
{
    if (a[0] != 0)
        throw std::domain_error("series exp needs a zero constant term");
    const std::size_t n = a.order();
    TruncatedSeries e(n);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (a[j] != 0)
                acc += Rational(static_cast<long long>(j)) * a[j] * e[k - j];
        e[k] = acc / static_cast<long long>(k);
    }
    return e;
}

// log(a) for a with constant term 1, via a * (log a)' = a'.
inline TruncatedSeries log(const TruncatedSeries &a)
{
    if (a[0] != 1)
        throw std::domain_error("series log needs constant term 1");
    const std::size_t n = a.order();
    TruncatedSeries l(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = Rational(static_cast<long long>(k)) * a[k];
        for (std::size_t j = 1; j < k; ++j)
            if (l[j] != 0)
                acc -= Rational(static_cast<long long>(j)) * l[j] * a[k - j];
        l[k] = acc / static_cast<long long>(k);
    }
    return l;
}

// a / b with b(0) != 0.
inline TruncatedSeries divide(const TruncatedSeries &a, const TruncatedSeries &b)
{
    a.require_same_order(b);
    if (b[0] == 0)
        throw std::domain_error("series division by a series with zero constant term; use divide_cancelling");
    const std::size_t n = a.order();
    TruncatedSeries q(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (std::size_t i = 1; i <= k; ++i)
            if (b[i] != 0)
                acc -= b[i] * q[k - i];
        q[k] = acc / b[0];
    }
    return q;
}

// a / b after cancelling the common factor x^k, k = valuation(b).
// The quotient is known modulo x^{order+1-k}, so its order is order - k.
inline TruncatedSeries divide_cancelling(const TruncatedSeries &a, const TruncatedSeries &b)
{
    a.require_same_order(b);
    const auto vb = b.valuation();
    if (!vb)
        throw std::domain_error("series division by a series that vanishes to the stored order");
    const std::size_t k = *vb;
    for (std::size_t i = 0; i < k; ++i)
        if (a[i] != 0)
            throw std::domain_error("numerator is not divisible by x^" + std::to_string(k));
    const std::size_t m = a.order() - k;
    TruncatedSeries as(m), bs(m);
    for (std::size_t i = 0; i <= m; ++i) {
        as[i] = a[i + k];
        bs[i] = b[i + k];
    }
    return divide(as, bs);
}

// d/dx; the result is known to one order less.
inline TruncatedSeries derivative(const TruncatedSeries &a)
{
    if (a.order() == 0)
        throw std::invalid_argument("derivative of an order-0 series carries no information");
    TruncatedSeries d(a.order() - 1);
    for (std::size_t k = 1; k <= a.order(); ++k)
        d[k - 1] = a[k] * static_cast<long long>(k);
    return d;
}

// f(g(x)) for g with zero constant term (Horner).
inline TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g)
{
    f.require_same_order(g);
    if (g[0] != 0)
        throw std::domain_error("series composition needs an inner series with zero constant term");
    const std::size_t n = f.order();
    TruncatedSeries r = TruncatedSeries::constant(n, f[n]);
    for (std::size_t k = n; k-- > 0;) {
        r *= g;
        r[0] += f[k];
    }
    return r;
}

// Compositional inverse g of f (f(0) = 0, f'(0) != 0), by Lagrange inversion:
// [y^m] g = (1/m) [w^{m-1}] (w / f(w))^m.
inline TruncatedSeries reversion(const TruncatedSeries &f)
{
    if (f[0] != 0 || f.order() == 0 || f[1] == 0)
        throw std::domain_error("series reversion needs f(0) = 0 and f'(0) != 0");
    const std::size_t n = f.order();
    const TruncatedSeries ratio = divide_cancelling(TruncatedSeries::variable(n), f); // order n-1
    TruncatedSeries g(n);
    TruncatedSeries power = TruncatedSeries::constant(n - 1, 1);
    for (std::size_t m = 1; m <= n; ++m) {
        power *= ratio;
        g[m] = power[m - 1] / static_cast<long long>(m);
    }
    return g;
}

// exp(c x) to the given order.
inline TruncatedSeries exp_linear(std::size_t order, const Rational &c)
{
    TruncatedSeries s(order);
    Rational term = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = term;
        term = term * c / static_cast<long long>(k + 1);
    }
    return s;
}

// sinh(c x), defined through its exponential series.
inline TruncatedSeries sinh_linear(std::size_t order, const Rational &c)
{
    return (exp_linear(order, c) - exp_linear(order, -c)) * Rational(1, 2);
}

inline TruncatedSeries cosh_linear(std::size_t order, const Rational &c)
{
    return (exp_linear(order, c) + exp_linear(order, -c)) * Rational(1, 2);
}

// (1 - x)^{-alpha} via the generalized binomial series.
inline TruncatedSeries inverse_binomial_power(std::size_t order, const Integer &alpha)
{
    TruncatedSeries s(order);
    for (std::size_t k = 0; k <= order; ++k)
        s[k] = binomial(alpha + static_cast<long long>(k) - 1, static_cast<unsigned>(k));
    return s;
}

// x / (1 - e^{-x}), the Todd characteristic series.
inline TruncatedSeries todd_series(std::size_t order)
{
    const TruncatedSeries denom = TruncatedSeries::constant(order + 1, 1) - exp_linear(order + 1, -1);
    return divide_cancelling(TruncatedSeries::variable(order + 1), denom);
}

// (x/2) / sinh(x/2); only even powers are nonzero.
inline TruncatedSeries ahat_series(std::size_t order)
{
    return divide_cancelling(TruncatedSeries::monomial(order + 1, 1, Rational(1, 2)),
                             sinh_linear(order + 1, Rational(1, 2)));
}

// x / tanh(x) = x cosh(x) / sinh(x); only even powers are nonzero.
inline TruncatedSeries x_coth_series(std::size_t order)
{
    const TruncatedSeries num = TruncatedSeries::variable(order + 1) * cosh_linear(order + 1, 1);
    return divide_cancelling(num, sinh_linear(order + 1, 1));
}

// x/(1-e^{-x}) == e^{x/2} (x/2)/sinh(x/2), compared coefficient by coefficient.
inline bool todd_ahat_identity_check(std::size_t order)
{
    return todd_series(order) == exp_linear(order, Rational(1, 2)) * ahat_series(order);
}

inline std::string to_string(const TruncatedSeries &a)
{
    std::string out;
    for (std::size_t k = 0; k <= a.order(); ++k) {
        if (a[k] == 0)
            continue;
        if (!out.empty())
            out += a[k] < 0 ? " - " : " + ";
        else if (a[k] < 0)
            out += "-";
        const Rational mag = a[k] < 0 ? Rational(-a[k]) : a[k];
        if (k == 0 || mag != 1)
            out += to_string(mag) + (k > 0 ? "*" : "");
        if (k > 0)
            out += (k == 1 ? "x" : "x^" + std::to_string(k));
    }
    if (out.empty())
        out = "0";
    return out + " + O(x^" + std::to_string(a.order() + 1) + ")";
}

} // namespace cpn

#endif // CPN_SERIES_HPP
