#include <gtest/gtest.h>

#include "contfrac/chebyshev.hpp"
#include "contfrac/mat2.hpp"
#include "contfrac/rational.hpp"

using namespace contfrac;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs)
{
    std::vector<BigInt> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST(Chebyshev, Boundary)
{
    EXPECT_TRUE(u_coeffs(-1).coeffs.empty());
    EXPECT_EQ(u_coeffs(-2).coeffs, ints({-1}));
    EXPECT_EQ(u_coeffs(0).coeffs, ints({1}));
    EXPECT_EQ(u_value(-2, Rational(7, 3)), Rational(-1));
    EXPECT_EQ(u_value(-1, Rational(7, 3)), Rational(0));
}

TEST(Chebyshev, KnownCoefficients)
{
    EXPECT_EQ(u_coeffs(1).coeffs, ints({0, 2}));
    EXPECT_EQ(u_coeffs(2).coeffs, ints({-1, 0, 4}));
    EXPECT_EQ(u_coeffs(5).coeffs, ints({0, 6, 0, -32, 0, 32}));
    EXPECT_EQ(u_coeffs(6).coeffs, ints({-1, 0, 24, 0, -80, 0, 64}));
}

TEST(Chebyshev, ThreeRoutesAgree)
{
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(u_coeffs(n).coeffs, u_coeffs_hypergeometric(n).coeffs) << n;
        EXPECT_EQ(u_coeffs(n).coeffs, u_genfun_coeff(n, 30).coeffs) << n;
    }
}

TEST(Chebyshev, Pieri)
{
    for (int n = 0; n <= 30; ++n) EXPECT_TRUE(pieri_check(n)) << n;
}

TEST(Chebyshev, CompleteHomogeneous)
{
    EXPECT_EQ(complete_homogeneous(2, Rational(2), Rational(3)), Rational(19));
    EXPECT_EQ(complete_homogeneous(3, Rational(1), Rational(1)), Rational(4));
    EXPECT_EQ(complete_homogeneous(0, Rational(5), Rational(-2)), Rational(1));
    EXPECT_EQ(complete_homogeneous(-1, Rational(5), Rational(-2)), Rational(0));
}

TEST(Chebyshev, ScaledMatchesRoots)
{
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            for (int m = 0; m <= 12; ++m)
                EXPECT_EQ(scaled_u(m, Rational(x + y), Rational(x * y)), complete_homogeneous(m, Rational(x), Rational(y)));
}

TEST(Chebyshev, ScaledLogPath)
{
    const Rational t(5, 3), d(-2, 7);
    for (long k = 0; k <= 40; ++k) EXPECT_EQ(scaled_u_pair_log(k, t, d), scaled_u_pair(k, t, d)) << k;
}

TEST(Chebyshev, DoubleEvaluation)
{
    EXPECT_NEAR(u_value(6, 0.3), -1 + 24 * 0.09 - 80 * 0.0081 + 64 * 0.000729, 1e-12);
}
