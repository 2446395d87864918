#ifndef CPN_RATIONAL_HPP
#define CPN_RATIONAL_HPP

// Exact rational scalar used by every symbolic computation in the library.
//
// Backed by boost::multiprecision::cpp_rational, which keeps values in lowest
// terms with a positive denominator after every operation.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational &q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational &q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational &q) { return denominator_of(q) == 1; }

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational &q)
{
    if (is_integer(q))
        return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// Binomial coefficient binom(top, k) for arbitrary integer top and k >= 0,
// evaluated as the falling product top(top-1)...(top-k+1)/k!.
inline Rational binomial(const Integer &top, unsigned k)
{
    Integer num = 1;
    for (unsigned i = 0; i < k; ++i)
        num *= top - i;
    return Rational(num, factorial(k));
}

} // namespace cpn

#endif // CPN_RATIONAL_HPP
