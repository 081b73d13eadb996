#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symid/multi_poly.hpp"
#include "symid/rational.hpp"
#include "symid/var_name.hpp"

namespace symid
{

/// Bounds for sampled rationals p/q: |p| <= max_num, 1 <= q <= max_den.
struct SampleBounds {
    long max_num = 20;
    long max_den = 20;
};

Rational sample_rational(std::mt19937_64 &rng, SampleBounds bounds = {});

/// Random univariate polynomial in v of degree <= max_degree.
MultiPoly random_univariate(std::mt19937_64 &rng, VarName v, unsigned max_degree, SampleBounds bounds = {});

} // namespace symid
