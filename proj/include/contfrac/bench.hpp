#pragma once

/**
 * @file bench.hpp
 * @brief Timing and ring-operation counts for four ways of computing
 *        K_{lm}(alpha_p) over a modular ring.
 *
 *   recurrence       continuant_rec, O(lm) ring ops
 *   transfer_binpow  A_l(alpha_p)^m by squaring, O(l + log m)
 *   closed_linear    closed form, S_k by its recurrence, O(l + m)
 *   closed_log       closed form, S_k by companion-matrix squaring, O(l + log m)
 */

#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "contfrac/continuant.hpp"
#include "contfrac/mat2.hpp"
#include "contfrac/modint.hpp"
#include "contfrac/periodic.hpp"

namespace contfrac {

/// Per-thread tally of ring operations performed through Counted<R>.
struct OpCounter {
    std::uint64_t adds = 0; ///< additions, subtractions, negations
    std::uint64_t muls = 0;

    std::uint64_t total() const { return adds + muls; }
    void reset() { adds = muls = 0; }

    static OpCounter& local()
    {
        thread_local OpCounter counter;
        return counter;
    }
};

/// Ring wrapper that counts every arithmetic operation.
template <Ring R>
class Counted {
public:
    Counted() = default;
    Counted(int v) : v_(v) {}
    explicit Counted(R v) : v_(std::move(v)) {}

    const R& value() const { return v_; }

    Counted operator-() const { ++OpCounter::local().adds; return Counted(-v_); }
    friend Counted operator+(const Counted& x, const Counted& y) { ++OpCounter::local().adds; return Counted(x.v_ + y.v_); }
    friend Counted operator-(const Counted& x, const Counted& y) { ++OpCounter::local().adds; return Counted(x.v_ - y.v_); }
    friend Counted operator*(const Counted& x, const Counted& y) { ++OpCounter::local().muls; return Counted(x.v_ * y.v_); }

    friend bool operator==(const Counted&, const Counted&) = default;

private:
    R v_{0};
};

/// Ring operations in one 2x2 matrix product (8 multiplications, 4 additions).
inline constexpr std::uint64_t kOpsPerMatMul = 12;

struct BenchReport {
    std::string strategy;
    long l = 0;
    std::uint64_t m = 0;
    std::int64_t ns = 0;
    std::uint64_t ops = 0;
    std::uint64_t digest = 0;
};

inline const std::vector<std::string>& bench_strategies()
{
    static const std::vector<std::string> names{"recurrence", "transfer_binpow", "closed_linear", "closed_log"};
    return names;
}

/// Runs all four strategies for every m; throws std::logic_error if their
/// results disagree.
template <std::uint64_t M>
std::vector<BenchReport> run_bench(const PeriodicAlpha<ModInt<M>>& alpha, const std::vector<std::uint64_t>& m_list)
{
    using C = Counted<ModInt<M>>;
    const auto counted = alpha.template map<C>([](const ModInt<M>& x) { return C(x); });
    const long p = alpha.base();
    const long l = alpha.period();

    auto run = [&](const std::string& name, std::uint64_t m) {
        OpCounter::local().reset();
        const auto start = std::chrono::steady_clock::now();
        C value;
        if (name == "recurrence") {
            value = continuant_rec(counted, p, l * static_cast<long>(m));
        } else if (name == "transfer_binpow") {
            value = mat_power_binary(transfer_matrix(counted, p, l), m).a;
        } else if (name == "closed_linear") {
            value = closed_form_klm(counted, p, static_cast<long>(m), ScaledUPath::linear);
        } else {
            value = closed_form_klm(counted, p, static_cast<long>(m), ScaledUPath::logarithmic);
        }
        const auto stop = std::chrono::steady_clock::now();
        return BenchReport{name, l, m,
                           std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(),
                           OpCounter::local().total(), value.value().residue()};
    };

    std::vector<BenchReport> reports;
    for (std::uint64_t m : m_list) {
        const std::size_t first = reports.size();
        for (const auto& name : bench_strategies()) reports.push_back(run(name, m));
        for (std::size_t i = first + 1; i < reports.size(); ++i)
            if (reports[i].digest != reports[first].digest)
                throw std::logic_error("bench: strategies disagree at m = " + std::to_string(m));
    }
    return reports;
}

/// Random period-l instance over ModInt, base 1.
template <std::uint64_t M = kDefaultModulus>
PeriodicAlpha<ModInt<M>> random_modint_alpha(long l, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto draw = [&] { return ModInt<M>::from_residue(rng()); };
    std::vector<ModInt<M>> a, b, c;
    for (long i = 0; i < l; ++i) {
        a.push_back(draw());
        b.push_back(draw());
        c.push_back(draw());
    }
    return PeriodicAlpha<ModInt<M>>(std::move(a), std::move(b), std::move(c), 1);
}

inline void write_bench_csv(std::ostream& os, const std::vector<BenchReport>& rows)
{
    os << "strategy,l,m,ns,ops,digest\n";
    for (const auto& r : rows)
        os << r.strategy << ',' << r.l << ',' << r.m << ',' << r.ns << ',' << r.ops << ',' << r.digest << '\n';
}

inline void write_bench_table(std::ostream& os, const std::vector<BenchReport>& rows)
{
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    os << pad("strategy", 17) << pad("l", 4) << pad("m", 10) << pad("ns", 14) << pad("ops", 12) << "digest\n";
    for (const auto& r : rows)
        os << pad(r.strategy, 17) << pad(std::to_string(r.l), 4) << pad(std::to_string(r.m), 10)
           << pad(std::to_string(r.ns), 14) << pad(std::to_string(r.ops), 12) << r.digest << '\n';
}

} // namespace contfrac
