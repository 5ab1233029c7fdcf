#include <gtest/gtest.h>

#include <random>

#include "contfrac/mat2.hpp"
#include "contfrac/rational.hpp"

using namespace contfrac;
using M = Mat2<Rational>;

namespace {

M mat(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

} // namespace

TEST(Mat2, Basics)
{
    EXPECT_EQ(mat(2, 5, 7, 3).det(), Rational(-29));
    EXPECT_EQ(mat(1, 1, 1, 0) * mat(1, 1, 1, 0), mat(2, 1, 1, 1));
    EXPECT_EQ(mat_power_naive(mat(1, 1, 1, 0), 5), mat(8, 5, 5, 3));
    EXPECT_EQ(mat_power_cheb(mat(1, 1, 1, 1), 3), mat(4, 4, 4, 4));
    EXPECT_EQ(mat_power_cheb(mat(0, 1, -1, 0), 2), mat(-1, 0, 0, -1));
    EXPECT_EQ(mat_power_cheb(mat(2, 5, 7, 3), 0), M::identity());
}

TEST(Mat2, PowerRoutesAgree)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int i = 0; i < 200; ++i) {
        const M A = mat(d(rng), d(rng), d(rng), d(rng));
        for (std::uint64_t m = 0; m <= 16; ++m) {
            const M want = mat_power_naive(A, m);
            EXPECT_EQ(mat_power_cheb(A, m), want);
            EXPECT_EQ(mat_power_binary(A, m), want);
        }
    }
}

TEST(Mat2, SingularBranch)
{
    const M A = mat(2, 4, 1, 2);
    ASSERT_EQ(A.det(), Rational(0));
    for (std::uint64_t m = 1; m <= 10; ++m) {
        Rational t(1);
        for (std::uint64_t k = 1; k < m; ++k) t = t * A.trace();
        EXPECT_EQ(mat_power_cheb(A, m), M::scalar(t) * A);
    }
}
