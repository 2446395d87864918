#ifndef CPN_SURFACE_HPP
#define CPN_SURFACE_HPP

// Numerical invariants of compact complex surfaces (signature, Noether,
// surface Riemann-Roch) and the top self-intersection of c_1 after blowing up
// a point on a manifold with b_2 = 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpn/cohomology.hpp"
#include "cpn/rational.hpp"

namespace cpn {

struct SurfaceInvariants {
    std::int64_t chi_top = 0; // topological Euler characteristic = integral of c_2
    std::int64_t tau = 0;     // signature
    std::int64_t K2 = 0;      // integral of c_1^2
    Rational chi_O = 0;       // holomorphic Euler characteristic

    // chi(O) = (K^2 + chi_top) / 12.
    bool noether_consistent() const { return chi_O * 12 == Rational(K2 + chi_top); }

    // tau = (1/3) integral of (c_1^2 - 2 c_2).
    bool signature_consistent() const { return 3 * tau == K2 - 2 * chi_top; }

    bool consistent() const { return noether_consistent() && signature_consistent(); }
};

// tau = (1/3) integral of p_1.
inline Rational signature_from_p1(const Rational &p1_integral) { return p1_integral / 3; }

// K^2 from chi(O) = (K^2 + chi_top) / 12.
inline Rational solve_K2(const Rational &chi_O, std::int64_t chi_top) { return chi_O * 12 - chi_top; }

// integral of c_1^2 = 3 tau + 2 chi_top.
inline std::int64_t c1sq_from_signature(std::int64_t tau, std::int64_t chi_top) { return 3 * tau + 2 * chi_top; }

// chi(L) = chi(O) + (L^2 - K.L) / 2.
inline Rational surface_rr(std::int64_t L2, std::int64_t KdotL, const Rational &chi_O)
{
    return chi_O + Rational(L2 - KdotL, 2);
}

// Even cohomology of the blowup of an n-dimensional M at a point, as far as
// it is generated by a pulled-back class a = pi^* alpha and the exceptional
// class e. Relations: a e = 0, and integrals of a^n and e^n are supplied.
class BlowupRing {
public:
    BlowupRing(std::size_t n, Rational base_top, Rational exceptional_top) :
        n_(n), base_top_(std::move(base_top)), exceptional_top_(std::move(exceptional_top))
    {
    }

    // Element x a + y e (degree one).
    struct Linear {
        Rational a;
        Rational e;
    };

    std::size_t dim() const noexcept { return n_; }

    // Polynomial in a and e modulo a e = 0 and degree > n.
    struct Element {
        Rational constant;
        std::vector<Rational> a; // a[k]: coefficient of a^k, k >= 1
        std::vector<Rational> e; // e[k]: coefficient of e^k, k >= 1
    };

    Element embed(const Linear &c) const
    {
        Element x{0, std::vector<Rational>(n_ + 1), std::vector<Rational>(n_ + 1)};
        if (n_ >= 1) {
            x.a[1] = c.a;
            x.e[1] = c.e;
        }
        return x;
    }

    Element multiply(const Element &x, const Element &y) const
    {
        Element r{x.constant * y.constant, std::vector<Rational>(n_ + 1), std::vector<Rational>(n_ + 1)};
        for (std::size_t k = 1; k <= n_; ++k) {
            r.a[k] += x.constant * y.a[k] + x.a[k] * y.constant;
            r.e[k] += x.constant * y.e[k] + x.e[k] * y.constant;
            for (std::size_t j = 1; j + k <= n_; ++j) {
                r.a[j + k] += x.a[k] * y.a[j];
                r.e[j + k] += x.e[k] * y.e[j];
                // a^k e^j terms are zero: e restricts to the exceptional
                // divisor, over which pulled-back classes are trivial.
            }
        }
        return r;
    }

    Rational integrate(const Element &x) const { return x.a[n_] * base_top_ + x.e[n_] * exceptional_top_; }

    // integral of (x a + y e)^n
    Rational integrate_power(const Linear &c) const
    {
        const Element base = embed(c);
        Element acc{1, std::vector<Rational>(n_ + 1), std::vector<Rational>(n_ + 1)};
        for (std::size_t k = 0; k < n_; ++k)
            acc = multiply(acc, base);
        return integrate(acc);
    }

private:
    std::size_t n_;
    Rational base_top_;
    Rational exceptional_top_;
};

// integral over the blowup of e^n: e restricted to E = CP^{n-1} is
// c_1(O(-1)) = -h, so  integral_{M~} e^n = integral_{CP^{n-1}} (-h)^{n-1}.
inline Rational exceptional_top_self_intersection(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("blowup needs n >= 2");
    const CohClass restricted = CohClass::generator(n - 1, -1);
    return integrate(pow(restricted, static_cast<unsigned>(n - 1)));
}

// integral of c_1(M~)^n for c_1(M~) = pi^* c_1(M) + coefficient * e with
// c_1(M) = 0. The default coefficient is the one of the canonical bundle
// formula K_{M~} = pi^* K_M + (n-1) E.
inline Rational blowup_c1_top(std::size_t n, std::optional<Rational> exceptional_coefficient = std::nullopt)
{
    if (n < 2)
        throw std::invalid_argument("blowup needs n >= 2");
    const Rational coeff = exceptional_coefficient.value_or(-Rational(static_cast<long long>(n) - 1));
    // b_2(M) = 0 forces c_1(M) = 0, so only e contributes; base_top is irrelevant.
    const BlowupRing ring(n, 0, exceptional_top_self_intersection(n));
    return ring.integrate_power({Rational(0), coeff});
}

} // namespace cpn

#endif // CPN_SURFACE_HPP
