#pragma once

#include <random>
#include <vector>

#include "contfrac/continuant.hpp"
#include "contfrac/rational.hpp"

namespace contfrac {

/// Uniform p/q with |p| <= range and 1 <= q <= range (so zero is common).
inline Rational random_small_rational(std::mt19937_64& rng, int range = 3)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, range);
    return Rational(num(rng), den(rng));
}

inline std::vector<Rational> random_rational_vector(std::mt19937_64& rng, long size, int range = 3)
{
    std::vector<Rational> v;
    for (long i = 0; i < size; ++i) v.push_back(random_small_rational(rng, range));
    return v;
}

/// Period-l sequences with entries from random_small_rational and a base
/// drawn from [-3, 3].
inline PeriodicAlpha<Rational> random_rational_alpha(std::mt19937_64& rng, long period, int range = 3)
{
    std::uniform_int_distribution<long> base(-3, 3);
    auto a = random_rational_vector(rng, period, range);
    auto b = random_rational_vector(rng, period, range);
    auto c = random_rational_vector(rng, period, range);
    return PeriodicAlpha<Rational>(std::move(a), std::move(b), std::move(c), base(rng));
}

} // namespace contfrac
