#ifndef CPN_COHOMOLOGY_HPP
#define CPN_COHOMOLOGY_HPP

// Even cohomology of an n-dimensional manifold with the ring structure of CP^n:
// Q[h]/(h^{n+1}) with the top normalization  integral of h^n = 1.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpn/rational.hpp"
#include "cpn/series.hpp"

namespace cpn {

class CohClass {
public:
    // The zero class in dimension n.
    explicit CohClass(std::size_t n) : coeffs_(n + 1) {}

    CohClass(std::size_t n, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() > n + 1)
            throw std::invalid_argument("class has components above the top degree");
        coeffs_.resize(n + 1);
    }

    static CohClass unit(std::size_t n) { return scalar(n, 1); }

    static CohClass scalar(std::size_t n, const Rational &c)
    {
        CohClass a(n);
        a.coeffs_[0] = c;
        return a;
    }

    // c * h^k; zero once k exceeds n.
    static CohClass generator_power(std::size_t n, std::size_t k, const Rational &c = 1)
    {
        CohClass a(n);
        if (k <= n)
            a.coeffs_[k] = c;
        return a;
    }

    static CohClass generator(std::size_t n, const Rational &c = 1) { return generator_power(n, 1, c); }

    std::size_t dim() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
    const Rational &operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational &operator[](std::size_t k) { return coeffs_.at(k); }

    bool is_zero() const
    {
        for (const auto &c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    // Lowest degree with a nonzero coefficient; dim()+1 for the zero class.
    std::size_t lowest_degree() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0)
                return k;
        return coeffs_.size();
    }

    CohClass &operator+=(const CohClass &o)
    {
        require_same_dim(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        return *this;
    }

    CohClass &operator-=(const CohClass &o)
    {
        require_same_dim(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        return *this;
    }

    CohClass &operator*=(const Rational &c)
    {
        for (auto &a : coeffs_)
            a *= c;
        return *this;
    }

    friend CohClass operator+(CohClass a, const CohClass &b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass &b) { return a -= b; }
    friend CohClass operator-(CohClass a) { return a *= Rational(-1); }
    friend CohClass operator*(CohClass a, const Rational &c) { return a *= c; }
    friend CohClass operator*(const Rational &c, CohClass a) { return a *= c; }

    // Cup product; degrees above n vanish.
    friend CohClass operator*(const CohClass &a, const CohClass &b)
    {
        a.require_same_dim(b);
        const std::size_t n = a.dim();
        CohClass r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    CohClass &operator*=(const CohClass &o) { return *this = *this * o; }

    friend bool operator==(const CohClass &a, const CohClass &b) = default;

    void require_same_dim(const CohClass &o) const
    {
        if (dim() != o.dim())
            throw std::invalid_argument("cohomology classes of different dimensions " + std::to_string(dim()) +
                                        " and " + std::to_string(o.dim()));
    }

private:
    std::vector<Rational> coeffs_;
};

inline CohClass coh_mul(const CohClass &a, const CohClass &b) { return a * b; }

// Evaluation on the fundamental class: the h^n coefficient.
inline Rational integrate(const CohClass &a) { return a.coeffs().back(); }

inline CohClass pow(const CohClass &a, unsigned e)
{
    CohClass r = CohClass::unit(a.dim());
    for (unsigned k = 0; k < e; ++k)
        r *= a;
    return r;
}

// sum_k f_k a^k. Needs a nilpotent argument and enough series terms to reach
// degree n.
inline CohClass apply_series(const TruncatedSeries &f, const CohClass &a)
{
    if (a[0] != 0)
        throw std::domain_error("series substitution needs a class with zero degree-0 part");
    const std::size_t n = a.dim();
    const std::size_t low = a.lowest_degree();
    // a^k vanishes as soon as k * low > n.
    const std::size_t needed = low > n ? 0 : n / low;
    if (f.order() < needed)
        throw std::invalid_argument("series order " + std::to_string(f.order()) + " too small for degree " +
                                    std::to_string(n));
    CohClass result = CohClass::scalar(n, f[0]);
    CohClass power = CohClass::unit(n);
    for (std::size_t k = 1; k <= needed; ++k) {
        power *= a;
        if (f[k] != 0)
            result += f[k] * power;
    }
    return result;
}

// exp of a nilpotent class; a finite sum.
inline CohClass coh_exp(const CohClass &a)
{
    if (a[0] != 0)
        throw std::domain_error("exp of a class with nonzero degree-0 part is not nilpotent");
    CohClass result = CohClass::unit(a.dim());
    CohClass term = CohClass::unit(a.dim());
    for (std::size_t k = 1; k <= a.dim(); ++k) {
        term = term * a * Rational(1, static_cast<long long>(k));
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

inline std::string to_string(const CohClass &a)
{
    std::string out;
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        const Rational &c = a[k];
        if (c == 0)
            continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (k == 0 || mag != 1)
            out += to_string(mag) + (k > 0 ? "*" : "");
        if (k > 0)
            out += (k == 1 ? "h" : "h^" + std::to_string(k));
    }
    return out.empty() ? "0" : out;
}

} // namespace cpn

#endif // CPN_COHOMOLOGY_HPP
