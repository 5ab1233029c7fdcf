#include <gtest/gtest.h>

#include <sstream>

#include "contfrac/bench.hpp"

using namespace contfrac;

TEST(Bench, StrategiesAgree)
{
    const auto rows = run_bench(random_modint_alpha(3, 7), {10, 1000, 100000});
    ASSERT_EQ(rows.size(), 12u);
    for (std::size_t i = 0; i < rows.size(); i += 4)
        for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ(rows[i + k].digest, rows[i].digest);
}

TEST(Bench, CountedOps)
{
    using C = Counted<ModInt<>>;
    OpCounter::local().reset();
    const Mat2<C> A{C(1), C(2), C(3), C(4)};
    (void)(A * A);
    EXPECT_EQ(OpCounter::local().total(), kOpsPerMatMul);
}

TEST(Bench, LogStrategiesDoubling)
{
    const auto alpha = random_modint_alpha(3, 1);
    for (std::uint64_t m = 64; m <= (1u << 20); m *= 2) {
        const auto rows = run_bench(alpha, {m, 2 * m});
        for (const std::string name : {"transfer_binpow", "closed_log"}) {
            std::uint64_t before = 0, after = 0;
            for (const auto& r : rows)
                if (r.strategy == name) (r.m == m ? before : after) = r.ops;
            EXPECT_LE(after, before + 2 * kOpsPerMatMul) << name << " m=" << m;
        }
    }
}

TEST(Bench, Csv)
{
    std::ostringstream os;
    write_bench_csv(os, run_bench(random_modint_alpha(2, 3), {5}));
    const std::string s = os.str();
    EXPECT_EQ(s.substr(0, s.find('\n')), "strategy,l,m,ns,ops,digest");
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 5);
}
