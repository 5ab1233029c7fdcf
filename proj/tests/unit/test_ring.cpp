#include <gtest/gtest.h>

#include <random>
#include <type_traits>

#include "contfrac/io.hpp"
#include "contfrac/laurent.hpp"
#include "contfrac/laurent_fraction.hpp"
#include "contfrac/modint.hpp"
#include "contfrac/rational.hpp"

using namespace contfrac;

static_assert(Ring<Rational> && Field<Rational> && IntegralDomain<Rational>);
static_assert(Ring<LaurentPoly> && IntegralDomain<LaurentPoly> && !Field<LaurentPoly>);
static_assert(Field<LaurentFraction>);
static_assert(Field<ModInt<>>);

// Mixing rings is a compile error.
static_assert(!std::is_invocable_v<std::plus<>, Rational, ModInt<>>);
static_assert(!std::is_invocable_v<std::multiplies<>, LaurentPoly, ModInt<>>);
static_assert(!std::is_invocable_v<std::plus<>, ModInt<7>, ModInt<11>>);
static_assert(!std::is_invocable_v<std::minus<>, Rational, LaurentPoly>);

TEST(Rational, Canonical)
{
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_THROW(Rational(1, 0), division_by_zero);
    EXPECT_THROW(Rational(1) / Rational(0), division_by_zero);
}

TEST(Rational, FieldAxiomsOnSamples)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-9, 9), e(1, 9);
    for (int i = 0; i < 200; ++i) {
        Rational x(d(rng), e(rng)), y(d(rng), e(rng)), z(d(rng), e(rng));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x + y) - y, x);
        if (!is_zero(y)) {
            EXPECT_EQ(x / y * y, x);
        }
    }
}

TEST(ModInt, Arithmetic)
{
    using M7 = ModInt<7>;
    EXPECT_EQ(M7(5) * M7(4), M7(6));
    EXPECT_EQ(M7(3) / M7(5), M7(2));
    EXPECT_EQ(M7(-1).residue(), 6u);
    EXPECT_THROW(M7(0).inverse(), division_by_zero);
    const ModInt<> big = ModInt<>::from_residue(kDefaultModulus - 1);
    EXPECT_EQ(big * big, ModInt<>(1));
    EXPECT_EQ(ModInt<>(BigInt("2305843009213693952")), ModInt<>(1)); // 2^61
}

TEST(LaurentPoly, Arithmetic)
{
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly qi(BigInt(1), -1);
    EXPECT_EQ(q * qi, LaurentPoly(1));
    EXPECT_EQ((q + 1) * (q - 1), q * q - 1);
    EXPECT_TRUE((q - q).is_zero());
    EXPECT_EQ((qi + 1 + q).str(), "q^-1 + 1 + q");
    EXPECT_EQ(LaurentPoly(0).str(), "0");
    EXPECT_EQ((q * q - 1).inverted_variable(), LaurentPoly(BigInt(1), -2) - 1);
    EXPECT_EQ(exact_div(q * q - 1, q + 1), q - 1);
    EXPECT_THROW(exact_div(q * q + 1, q + 1), std::domain_error);
}

TEST(LaurentPoly, Gcd)
{
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly g = gcd((q + 1) * (q * q + 1) * q.shifted(-3), (q + 1) * (q - 2) * 6);
    EXPECT_EQ(g, q + 1);
}

TEST(LaurentFraction, Reduces)
{
    const LaurentPoly q = LaurentPoly::q();
    const LaurentFraction f((q + 1) * (q - 1), (q - 1) * LaurentPoly(BigInt(-2), -2));
    EXPECT_EQ(f.numerator(), -(q + 1) * q * q);
    EXPECT_EQ(f.denominator(), LaurentPoly(2));
    EXPECT_EQ(LaurentFraction(q, q), LaurentFraction(1));
    EXPECT_THROW(LaurentFraction(q, LaurentPoly(0)), division_by_zero);
}

TEST(Io, RoundTrip)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-50, 50), e(1, 50), ex(-4, 4);
    for (int i = 0; i < 200; ++i) {
        const Rational r(d(rng), e(rng));
        EXPECT_EQ(parse_element<Rational>(to_text(r)), r);
        LaurentPoly p;
        for (int k = 0; k < 4; ++k) p = p + LaurentPoly(BigInt(d(rng)), ex(rng));
        EXPECT_EQ(parse_element<LaurentPoly>(to_text(p)), p) << to_text(p);
        const auto m = ModInt<>::from_residue(static_cast<std::uint64_t>(rng()));
        EXPECT_EQ(parse_element<ModInt<>>(to_text(m)), m);
    }
}

TEST(Io, Rejects)
{
    EXPECT_THROW(parse_element<Rational>("1/0"), std::exception);
    EXPECT_THROW(parse_element<Rational>("abc"), parse_error);
    EXPECT_THROW(parse_element<LaurentPoly>("q^"), parse_error);
    EXPECT_THROW(parse_element<LaurentPoly>("2*x"), parse_error);
}
