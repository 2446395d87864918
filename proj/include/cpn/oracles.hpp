#ifndef CPN_ORACLES_HPP
#define CPN_ORACLES_HPP

// Reference evaluations that avoid the production code paths they check.

#include <cstddef>
#include <vector>

#include "cpn/cohomology.hpp"
#include "cpn/genera.hpp"
#include "cpn/rational.hpp"

namespace cpn::oracle {

// prod_j Q(a_j h^2) with the roots written out, for comparison against
// genus_eval on split_pontryagin(n, roots).
inline CohClass split_genus_direct(const CharSeries &q, std::size_t n, const std::vector<Rational> &roots)
{
    CohClass result = CohClass::unit(n);
    for (const auto &a : roots)
        result *= apply_series(q.q, CohClass::generator_power(n, 2, a));
    return result;
}

} // namespace cpn::oracle

#endif // CPN_ORACLES_HPP
