#ifndef CPN_HRR_HPP
#define CPN_HRR_HPP

// Holomorphic Euler characteristics on a manifold with the cohomology and
// Pontrjagin classes of CP^n, computed along independent routes:
//
//   genus route    integral of e^{s h} e^{lambda h / 2} A-hat(p(CP^n))
//   series route   [x^n] e^{s x} (x / (1 - e^{-x}))^{n+1}
//   residue route  the same coefficient after substituting y = 1 - e^{-z}
//   closed form    (s+1)(s+2)...(s+n) / n!
//
// plus the integer classification of c_1 = lambda h forced by chi(O) = 1.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpn/cohomology.hpp"
#include "cpn/genera.hpp"
#include "cpn/rational.hpp"
#include "cpn/series.hpp"

namespace cpn {

// chi(M, L^twist) where c_1(M) = lambda h and c_1(L) = h.
struct HrrProblem {
    int n = 1;
    std::int64_t lambda = 2;
    std::int64_t twist = 0;
};

// c_1 reduces mod 2 to w_2, so lambda must have the parity of n+1.
inline bool parity_ok(int n, std::int64_t lambda) { return ((lambda - n - 1) % 2) == 0; }

inline Rational chi_genus_route(const HrrProblem &p)
{
    if (p.n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    if (!parity_ok(p.n, p.lambda))
        throw std::invalid_argument("lambda = " + std::to_string(p.lambda) + " violates lambda = n+1 (mod 2) for n = " +
                                    std::to_string(p.n));
    const auto n = static_cast<std::size_t>(p.n);
    const CohClass c1 = CohClass::generator(n, p.lambda);
    const CohClass line = CohClass::generator(n, p.twist);
    return integrate(coh_exp(line) * todd_class(c1, pontryagin_cpn(n)));
}

inline Rational chi_series_route(int n, std::int64_t s)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    const auto order = static_cast<std::size_t>(n);
    const TruncatedSeries integrand =
        exp_linear(order, s) * pow(todd_series(order), static_cast<unsigned>(n + 1));
    return integrand.coeff(order);
}

// (s+1)(s+2)...(s+n)/n!, i.e. binom(n+s, n) extended to negative s.
inline Rational chi_closed_form(int n, std::int64_t s)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    Integer num = 1;
    for (int i = 1; i <= n; ++i)
        num *= Integer(s) + i;
    return Rational(num, factorial(static_cast<unsigned>(n)));
}

// Compositional inverse of y = 1 - e^{-z}, obtained by series reversion.
inline TruncatedSeries substitution_inverse(std::size_t order)
{
    const TruncatedSeries forward = TruncatedSeries::constant(order, 1) - exp_linear(order, -1);
    return reversion(forward);
}

// The residue integrand e^{s z} dz / (1 - e^{-z})^{n+1}, rewritten in the
// variable y = 1 - e^{-z} and multiplied by y^{n+1}. The residue at 0 is its
// y^n coefficient.
inline TruncatedSeries residue_integrand(int n, std::int64_t s)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    const auto order = static_cast<std::size_t>(n) + 1;
    const TruncatedSeries z_of_y = substitution_inverse(order);
    const TruncatedSeries forward = TruncatedSeries::constant(order, 1) - exp_linear(order, -1);

    // (1 - e^{-z(y)}) is y again; keep the computed value rather than assuming it.
    const TruncatedSeries denom = compose(forward, z_of_y);
    const TruncatedSeries y_over_denom = divide_cancelling(TruncatedSeries::variable(order), denom); // order n
    const TruncatedSeries numer = exp(z_of_y * Rational(s)).truncate(order - 1);
    const TruncatedSeries dz_dy = derivative(z_of_y); // order n
    return numer * dz_dy * pow(y_over_denom, static_cast<unsigned>(n + 1));
}

inline Rational residue_route(int n, std::int64_t s)
{
    return residue_integrand(n, s).coeff(static_cast<std::size_t>(n));
}

struct C1Classification {
    int n = 0;
    std::vector<std::int64_t> twists;  // s with (s+1)...(s+n) = n!
    std::vector<std::int64_t> lambdas; // lambda = n + 1 + 2 s
    std::int64_t window_low = 0;
    std::int64_t window_high = 0;
    // Outside [window_low, window_high] the product provably misses n!.
    bool upper_certified = false;
    bool lower_certified = false;

    bool exhaustive() const { return upper_certified && lower_certified; }
};

namespace detail {

inline Integer rising_product(std::int64_t s, int n)
{
    Integer p = 1;
    for (int i = 1; i <= n; ++i)
        p *= Integer(s) + i;
    return p;
}

} // namespace detail

// All integers s with (s+n)...(s+1) = n!. The search runs over
// [-n-2, 1]; the two tails are excluded by factor-wise bounds checked here.
inline C1Classification classify_c1(int n)
{
    if (n < 1)
        throw std::invalid_argument("dimension must be at least 1");
    C1Classification out;
    out.n = n;
    out.window_low = -static_cast<std::int64_t>(n) - 2;
    out.window_high = 1;
    const Integer target = factorial(static_cast<unsigned>(n));

    for (std::int64_t s = out.window_low; s <= out.window_high; ++s) {
        if (detail::rising_product(s, n) == target) {
            out.twists.push_back(s);
            out.lambdas.push_back(n + 1 + 2 * s);
        }
    }

    // s >= 1: factor s+i >= 1+i > i, and the product of the lower bounds
    // (n+1)! already exceeds n!.
    {
        bool factorwise = true;
        Integer bound = 1;
        for (int i = 1; i <= n; ++i) {
            const std::int64_t low = out.window_high + i;
            factorwise = factorwise && low > i;
            bound *= low;
        }
        out.upper_certified = factorwise && bound > target;
    }

    // s <= -n-2: |s+i| >= n+2-i >= 2, so |product| >= (n+1)! > n!.
    {
        bool factorwise = true;
        Integer bound = 1;
        for (int i = 1; i <= n; ++i) {
            const std::int64_t s = out.window_low;
            const std::int64_t magnitude = -(s + i);
            const std::int64_t low = n + 2 - i;
            factorwise = factorwise && magnitude >= low && low >= 2;
            bound *= low;
        }
        out.lower_certified = factorwise && bound > target;
    }
    return out;
}

} // namespace cpn

#endif // CPN_HRR_HPP
