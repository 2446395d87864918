#ifndef CPN_GENERA_HPP
#define CPN_GENERA_HPP

// Multiplicative sequences (Todd, A-hat, L) evaluated on total Chern or
// Pontrjagin classes, plus the Chern/Pontrjagin conversions used for CP^n.
//
// A genus is evaluated without ever naming the formal roots: the power sums
// of the roots come from Newton's identities, and
//     prod_j Q(g_j) = exp( sum_k [u^k](log Q) * s_k ).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpn/cohomology.hpp"
#include "cpn/rational.hpp"
#include "cpn/series.hpp"

namespace cpn {

enum class GenusKind { Todd, Ahat, L, Custom };
enum class TotalKind { Chern, Pontrjagin };

inline std::string to_string(GenusKind k)
{
    switch (k) {
        case GenusKind::Todd: return "todd";
        case GenusKind::Ahat: return "ahat";
        case GenusKind::L: return "l";
        case GenusKind::Custom: return "custom";
    }
    return "?";
}

// Cohomological degree (in powers of h) of a single formal root.
constexpr std::size_t root_degree(TotalKind k) { return k == TotalKind::Chern ? 1 : 2; }

struct CharSeries {
    GenusKind kind;
    TotalKind roots; // which total class this series is meant to be evaluated on
    TruncatedSeries q;
};

namespace detail {

// Keeps the even coefficients of an even x-series, renaming x^2 -> u.
inline TruncatedSeries even_part_in_square(const TruncatedSeries &xs, std::size_t order)
{
    TruncatedSeries u(order);
    for (std::size_t k = 0; k <= order; ++k)
        u[k] = xs[2 * k];
    return u;
}

} // namespace detail

// x/(1-e^{-x}) in a Chern root x.
inline CharSeries todd_char(std::size_t order = default_series_order)
{
    return {GenusKind::Todd, TotalKind::Chern, todd_series(order)};
}

// (sqrt(u)/2)/sinh(sqrt(u)/2) in a Pontrjagin root u.
inline CharSeries ahat_char(std::size_t order = default_series_order)
{
    return {GenusKind::Ahat, TotalKind::Pontrjagin, detail::even_part_in_square(ahat_series(2 * order), order)};
}

// sqrt(u)/tanh(sqrt(u)) in a Pontrjagin root u.
inline CharSeries l_char(std::size_t order = default_series_order)
{
    return {GenusKind::L, TotalKind::Pontrjagin, detail::even_part_in_square(x_coth_series(2 * order), order)};
}

inline CharSeries make_char(GenusKind kind, std::size_t order)
{
    switch (kind) {
        case GenusKind::Todd: return todd_char(order);
        case GenusKind::Ahat: return ahat_char(order);
        case GenusKind::L: return l_char(order);
        case GenusKind::Custom: break;
    }
    throw std::invalid_argument("custom characteristic series have no canonical construction");
}

// Total Chern class sum c_i or total Pontrjagin class sum p_i of an
// n-dimensional manifold; component i sits in degree i * root_degree(kind).
class TotalClass {
public:
    TotalClass(TotalKind kind, std::size_t n, std::vector<CohClass> components) :
        kind_(kind), n_(n), components_(std::move(components))
    {
        const std::size_t count = n / root_degree(kind) + 1;
        if (components_.empty())
            components_.push_back(CohClass::unit(n));
        if (components_.size() > count) {
            for (std::size_t i = count; i < components_.size(); ++i)
                if (!components_[i].is_zero())
                    throw std::invalid_argument("characteristic class component above the top degree");
        }
        components_.resize(count, CohClass(n));
        for (std::size_t i = 0; i < count; ++i) {
            if (components_[i].dim() != n)
                throw std::invalid_argument("component " + std::to_string(i) + " lives in the wrong ring");
            const std::size_t deg = i * root_degree(kind);
            for (std::size_t k = 0; k <= n; ++k)
                if (k != deg && components_[i][k] != 0)
                    throw std::invalid_argument("component " + std::to_string(i) + " is not homogeneous of degree " +
                                                std::to_string(deg));
        }
        if (components_[0] != CohClass::unit(n))
            throw std::invalid_argument("total class must start with 1");
    }

    // The trivial total class 1.
    static TotalClass trivial(TotalKind kind, std::size_t n) { return TotalClass(kind, n, {}); }

    TotalKind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return n_; }
    const std::vector<CohClass> &components() const noexcept { return components_; }
    const CohClass &operator[](std::size_t i) const { return components_.at(i); }

    CohClass total() const
    {
        CohClass sum(n_);
        for (const auto &c : components_)
            sum += c;
        return sum;
    }

    // Whitney product: total class of the direct sum.
    friend TotalClass operator*(const TotalClass &a, const TotalClass &b)
    {
        if (a.kind_ != b.kind_ || a.n_ != b.n_)
            throw std::invalid_argument("total classes of different kinds or dimensions");
        const std::size_t count = a.components_.size();
        std::vector<CohClass> out(count, CohClass(a.n_));
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; i + j < count; ++j)
                out[i + j] += a.components_[i] * b.components_[j];
        return TotalClass(a.kind_, a.n_, std::move(out));
    }

    friend bool operator==(const TotalClass &, const TotalClass &) = default;

private:
    TotalKind kind_;
    std::size_t n_;
    std::vector<CohClass> components_;
};

// p_i(CP^n) = binom(n+1, i) h^{2i}, 0 <= i <= n/2.
inline TotalClass pontryagin_cpn(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("CP^n needs n >= 1");
    std::vector<CohClass> p;
    for (std::size_t i = 0; 2 * i <= n; ++i)
        p.push_back(CohClass::generator_power(n, 2 * i, binomial(Integer(n + 1), static_cast<unsigned>(i))));
    return TotalClass(TotalKind::Pontrjagin, n, std::move(p));
}

// c_i(CP^n) = binom(n+1, i) h^i.
inline TotalClass chern_cpn(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("CP^n needs n >= 1");
    std::vector<CohClass> c;
    for (std::size_t i = 0; i <= n; ++i)
        c.push_back(CohClass::generator_power(n, i, binomial(Integer(n + 1), static_cast<unsigned>(i))));
    return TotalClass(TotalKind::Chern, n, std::move(c));
}

// prod_j (1 + a_j h^2): the Pontrjagin class with explicit roots a_j h^2.
inline TotalClass split_pontryagin(std::size_t n, const std::vector<Rational> &roots)
{
    TotalClass t = TotalClass::trivial(TotalKind::Pontrjagin, n);
    for (const auto &a : roots) {
        std::vector<CohClass> f{CohClass::unit(n)};
        if (n >= 2)
            f.push_back(CohClass::generator_power(n, 2, a));
        t = t * TotalClass(TotalKind::Pontrjagin, n, std::move(f));
    }
    return t;
}

// Power sums s_1..s_K of the formal roots, from the elementary symmetric
// functions e_k = components via
//   s_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k.
inline std::vector<CohClass> power_sums(const TotalClass &t)
{
    const std::size_t n = t.dim();
    const std::size_t top = t.components().size() - 1;
    std::vector<CohClass> s(top + 1, CohClass(n));
    for (std::size_t k = 1; k <= top; ++k) {
        CohClass acc = t[k] * Rational(static_cast<long long>(k));
        if (k % 2 == 0)
            acc = -acc;
        for (std::size_t i = 1; i < k; ++i) {
            const CohClass term = t[i] * s[k - i];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        s[k] = std::move(acc);
    }
    return s;
}

inline CohClass genus_eval(const CharSeries &q, const TotalClass &t)
{
    if (q.q[0] != 1)
        throw std::domain_error("characteristic series must have constant term 1");
    if (q.roots != t.kind())
        throw std::invalid_argument(to_string(q.kind) + " series does not match the kind of total class given");
    const std::size_t top = t.components().size() - 1;
    if (q.q.order() < top)
        throw std::invalid_argument("characteristic series order too small for this dimension");
    const TruncatedSeries logq = log(q.q);
    const auto s = power_sums(t);
    CohClass exponent(t.dim());
    for (std::size_t k = 1; k <= top; ++k)
        if (logq[k] != 0)
            exponent += logq[k] * s[k];
    return coh_exp(exponent);
}

// p_1 = c_1^2 - 2 c_2.
inline CohClass p1_from_chern(const CohClass &c1, const CohClass &c2)
{
    c1.require_same_dim(c2);
    return c1 * c1 - Rational(2) * c2;
}

// c_2 forced by p_1 = (n+1) h^2 together with c_1 = (n+1) h:
// 2 c_2 = c_1^2 - p_1 = n(n+1) h^2.
inline CohClass c2_from_equality(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("c_2 needs n >= 2");
    const CohClass c1 = CohClass::generator(n, static_cast<long long>(n + 1));
    const CohClass p1 = pontryagin_cpn(n)[1];
    return (c1 * c1 - p1) * Rational(1, 2);
}

// (2(n+1)/n) c_2 - c_1^2, the class whose product with h^{n-2} is
// nonnegative on Kähler-Einstein manifolds.
inline CohClass chern_number_gap(const CohClass &c1, const CohClass &c2)
{
    c1.require_same_dim(c2);
    const auto n = static_cast<long long>(c1.dim());
    if (n < 2)
        throw std::invalid_argument("the Chern number inequality needs n >= 2");
    return Rational(2 * (n + 1), n) * c2 - c1 * c1;
}

// Td = e^{c_1/2} * A-hat, the route available from Pontrjagin data alone.
inline CohClass todd_class(const CohClass &c1, const TotalClass &p)
{
    if (p.kind() != TotalKind::Pontrjagin)
        throw std::invalid_argument("todd_class expects a Pontrjagin total class");
    c1.require_same_dim(p.total());
    const std::size_t order = std::max<std::size_t>(1, p.dim() / 2);
    return coh_exp(c1 * Rational(1, 2)) * genus_eval(ahat_char(order), p);
}

} // namespace cpn

#endif // CPN_GENERA_HPP
