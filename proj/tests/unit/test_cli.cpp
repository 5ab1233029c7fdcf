#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "contfrac/cli.hpp"
#include "contfrac/config.hpp"

using namespace contfrac;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "contfrac");
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string cfg(const std::string& name) { return std::string(CONTFRAC_CONFIG_DIR) + "/" + name; }

} // namespace

TEST(Config, Fibonacci)
{
    const auto c = parse_config("ring=rational\nl=1\na=[1]\nb=[1]\nc=[-1]\np=1\n");
    EXPECT_EQ(c.ring, RingKind::rational);
    EXPECT_EQ(c.period, 1);
    EXPECT_EQ(continuant_rec(to_alpha<Rational>(c), c.p, 5), Rational(8));
}

TEST(Config, QFibonacci)
{
    const auto c = parse_config("# q-Fibonacci\nring = laurent\nl = 2\na = [1, 1]\nb = [q, q^-1]  # weights\nc = [-1, -1]\n");
    EXPECT_EQ(c.p, 1);
    const auto alpha = to_alpha<LaurentPoly>(c);
    EXPECT_EQ(alpha.b(2), LaurentPoly(BigInt(1), -1));
    EXPECT_EQ(continuant_rec(alpha, 1, 4), q_fibonacci(5));
}

TEST(Config, Errors)
{
    auto line_of = [](const std::string& text) {
        try {
            (void)parse_config(text);
        } catch (const config_error& e) {
            return std::make_pair(e.line(), e.field());
        }
        return std::make_pair(0, std::string());
    };
    EXPECT_EQ(line_of("ring=rational\nl=2\na=[1]\nb=[1,1]\nc=[1,1]\n"), std::make_pair(3, std::string("a")));
    EXPECT_EQ(line_of("ring=rational\nl=1\na=[x]\nb=[1]\nc=[1]\n"), std::make_pair(3, std::string("a")));
    EXPECT_EQ(line_of("ring=ring\n"), std::make_pair(1, std::string("ring")));
    EXPECT_EQ(line_of("ring=rational\nl=1\na=[1]\nb=[1]\nc=[1]\nd=[1]\n"), std::make_pair(6, std::string("d")));
    EXPECT_EQ(line_of("ring=rational\nring=laurent\n"), std::make_pair(2, std::string("ring")));
    EXPECT_EQ(line_of("ring=rational\nl=1\na=[1]\nb=[1]\n").second, "c");
    EXPECT_EQ(line_of("ring=rational\nl=0\n"), std::make_pair(2, std::string("l")));
    EXPECT_EQ(line_of("ring=rational\nl=1\na=1\n"), std::make_pair(3, std::string("a")));
}

TEST(Cli, PeriodicFib)
{
    const auto r = run({"periodic", "--config", cfg("fib.cfg"), "--m", "5", "--verify"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "8\nPASS closed = 8\nPASS rec = 8\nPASS oracle = 8\nPASS matpow = 8\n");
}

TEST(Cli, ContinuantMinusOne)
{
    for (const char* s : {"oracle", "rec", "transfer"}) {
        const auto r = run({"continuant", "--config", cfg("period3.cfg"), "--n", "-1", "--strategy", s});
        EXPECT_EQ(r.status, 0);
        EXPECT_EQ(r.out, "0\n");
    }
}

TEST(Cli, Continuant)
{
    EXPECT_EQ(run({"continuant", "--config", cfg("period3.cfg"), "--n", "7"}).out, "157/18\n");
    EXPECT_EQ(run({"continuant", "--config", cfg("period3.cfg"), "--n", "7", "--strategy", "oracle"}).out, "157/18\n");
}

TEST(Cli, QCommands)
{
    EXPECT_EQ(run({"qrat", "--r", "8", "--s", "5"}).out,
              "numerator: 1 + 2*q + 2*q^2 + 2*q^3 + q^4\ndenominator: 1 + 2*q + q^2 + q^3\n");
    EXPECT_EQ(run({"qfib", "--n", "3"}).out, "1 + q\n");
    EXPECT_EQ(run({"quatpow", "--q", "1,2,3,4", "--n", "5"}).out, "3916,1112,1668,2224\n");
    EXPECT_EQ(run({"chebyshev", "--n", "2"}).out, "[-1, 0, 4]\n");
}

TEST(Cli, VerifyAllFixtures)
{
    for (const auto& entry : std::filesystem::directory_iterator(CONTFRAC_CONFIG_DIR)) {
        const auto r = run({"verify", "--config", entry.path().string(), "--max-n", "8", "--max-m", "4"});
        EXPECT_EQ(r.status, 0) << entry.path() << "\n" << r.out << r.err;
        EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    }
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"continuant", "--n", "1"}).status, 2);
    EXPECT_EQ(run({"periodic", "--config", cfg("fib.cfg"), "--m", "2", "--strategy", "magic"}).status, 2);
    const auto r = run({"qrat", "--r", "4", "--s", "2"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("coprime"), std::string::npos);
    EXPECT_EQ(run({"--help"}).status, 0);
}
