#include "symid/sampling.hpp"

namespace symid
{

Rational sample_rational(std::mt19937_64 &rng, SampleBounds bounds)
{
    std::uniform_int_distribution<long> num(-bounds.max_num, bounds.max_num);
    std::uniform_int_distribution<long> den(1, bounds.max_den);
    const long p = num(rng);
    return Rational(p, den(rng));
}

MultiPoly random_univariate(std::mt19937_64 &rng, VarName v, unsigned max_degree, SampleBounds bounds)
{
    MultiPoly out;
    for (unsigned e = 0; e <= max_degree; ++e) {
        out.add_term(Monomial::of(v, e), sample_rational(rng, bounds));
    }
    return out;
}

} // namespace symid
