#pragma once

/**
 * @file periodic.hpp
 * @brief Closed forms for continuants of l-periodic sequences.
 *
 * With A = A_l(alpha_p), t = tr A, d = det A = prod_{j<l} b_{p+j} c_{p+j}
 * and S_k = S_k(t, d):
 *
 *     K_{lm}(alpha_p)       = S_{m-1} K_l(alpha_p) - d S_{m-2}
 *     K_{lm-1}(alpha_{p+1}) = S_{m-1} K_{l-1}(alpha_{p+1})
 *     K_{lm+j}(alpha_{p-j}) = K_j(alpha_{p-j}) K_{lm}(alpha_p)
 *                             - b_{p-1} c_{p-1} K_{j-1}(alpha_{p-j}) K_{lm-1}(alpha_{p+1}),
 *                             -1 <= j <= l-2.
 *
 * For j = -1 the product -b_{p-1} c_{p-1} K_{-2}(alpha_{p+1}) is taken to be 1.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "contfrac/chebyshev.hpp"
#include "contfrac/continuant.hpp"
#include "contfrac/mat2.hpp"
#include "contfrac/random.hpp"
#include "contfrac/rational.hpp"

namespace contfrac {

/// How S_k(t, d) is evaluated inside the closed forms.
enum class ScaledUPath {
    linear,      ///< three-term recurrence, O(m)
    logarithmic, ///< companion-matrix power, O(log m)
};

/// Quantities the closed forms need from one period starting at p.
template <Ring R>
struct PeriodInvariants {
    R trace;        ///< tr A_l(alpha_p)
    R det;          ///< prod_{j=1}^{l} b_{p+j-1} c_{p+j-1}
    R k_l;          ///< K_l(alpha_p)
    R k_l_minus1;   ///< K_{l-1}(alpha_{p+1})
};

template <Ring R>
PeriodInvariants<R> period_invariants(const PeriodicAlpha<R>& alpha, long p)
{
    const long l = alpha.period();
    const Mat2<R> A = transfer_matrix(alpha, p, l);
    R det(1);
    for (long j = 0; j < l; ++j) det = det * alpha.b(p + j) * alpha.c(p + j);
    return {A.trace(), std::move(det), A.a, A.c};
}

namespace detail {

template <Ring R>
std::pair<R, R> scaled_pair(long k, const R& t, const R& d, ScaledUPath path)
{
    return path == ScaledUPath::linear ? scaled_u_pair(k, t, d) : scaled_u_pair_log(k, t, d);
}

} // namespace detail

/// K_{lm}(alpha_p).
template <Ring R>
R closed_form_klm(const PeriodicAlpha<R>& alpha, long p, long m, ScaledUPath path = ScaledUPath::linear)
{
    if (m < 0) throw precondition_error("closed_form_klm: m must be >= 0");
    if (m == 0) return R(1);
    const auto inv = period_invariants(alpha, p);
    const auto [s1, s2] = detail::scaled_pair(m - 1, inv.trace, inv.det, path);
    return s1 * inv.k_l - inv.det * s2;
}

/// K_{lm-1}(alpha_{p+1}); m = 0 gives K_{-1} = 0.
template <Ring R>
R closed_form_klm_minus1(const PeriodicAlpha<R>& alpha, long p, long m, ScaledUPath path = ScaledUPath::linear)
{
    if (m < 0) throw precondition_error("closed_form_klm_minus1: m must be >= 0");
    if (m == 0) return R(0);
    const auto inv = period_invariants(alpha, p);
    return detail::scaled_pair(m - 1, inv.trace, inv.det, path).first * inv.k_l_minus1;
}

namespace detail {
inline bool valid_offset(long j, long l) { return j >= -1 && j <= std::max(l - 2, 0L); }
} // namespace detail

/// K_{lm+j}(alpha_{p-j}) for -1 <= j <= l-2.  j = 0 is also accepted when
/// l = 1 and gives K_{lm}(alpha_p).
template <Ring R>
R closed_form_general(const PeriodicAlpha<R>& alpha, long p, long m, long j,
                      ScaledUPath path = ScaledUPath::linear)
{
    const long l = alpha.period();
    if (!detail::valid_offset(j, l))
        throw precondition_error("closed_form_general: j must lie in [-1, max(l-2, 0)]");
    if (m < 0) throw precondition_error("closed_form_general: m must be >= 0");
    const R klm1 = closed_form_klm_minus1(alpha, p, m, path);
    if (j == -1) return klm1;
    const R klm = closed_form_klm(alpha, p, m, path);
    if (j == 0) return klm;
    const R kj = continuant_rec(alpha, p - j, j);
    const R kj1 = continuant_rec(alpha, p - j, j - 1);
    return kj * klm - alpha.b(p - 1) * alpha.c(p - 1) * kj1 * klm1;
}

/// Evaluation strategy for K_{lm+j}(alpha_{p-j}).
enum class Strategy { closed, rec, oracle, matpow };

/// K_{lm+j}(alpha_{p-j}) through A_j(alpha_{p-j}) A_l(alpha_p)^m (1, 0)^T.
template <Ring R>
R continuant_by_matrix_power(const PeriodicAlpha<R>& alpha, long p, long m, long j)
{
    const long l = alpha.period();
    if (!detail::valid_offset(j, l)) throw precondition_error("j must lie in [-1, max(l-2, 0)]");
    if (m < 0) throw precondition_error("m must be >= 0");
    const Mat2<R> P = mat_power_binary(transfer_matrix(alpha, p, l), static_cast<std::uint64_t>(m));
    if (j == -1) return P.c;
    return transfer_matrix(alpha, p - j, j).apply(P.a, P.c).first;
}

template <IntegralDomain R>
R periodic_value(const PeriodicAlpha<R>& alpha, long p, long m, long j, Strategy s)
{
    const long l = alpha.period();
    if (!detail::valid_offset(j, l)) throw precondition_error("j must lie in [-1, max(l-2, 0)]");
    if (m < 0) throw precondition_error("m must be >= 0");
    switch (s) {
    case Strategy::closed: return closed_form_general(alpha, p, m, j);
    case Strategy::rec: return continuant_rec(alpha, p - j, l * m + j);
    case Strategy::oracle: return continuant_det_oracle(alpha, p - j, l * m + j);
    case Strategy::matpow: return continuant_by_matrix_power(alpha, p, m, j);
    }
    throw precondition_error("unknown strategy");
}

/// Outcome of checking the specialised small-period formulas.
struct FixtureReport {
    std::string name;
    long checks = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline void expect_equal(FixtureReport& report, const Rational& got, const Rational& want, const std::string& what)
{
    ++report.checks;
    if (got != want) report.mismatches.push_back(what + ": formula " + got.str() + " != oracle " + want.str());
}

inline std::string describe(const PeriodicAlpha<Rational>& alpha, long p, long m)
{
    std::ostringstream os;
    os << "l=" << alpha.period() << " p=" << p << " m=" << m << " a=(";
    for (const auto& v : alpha.a_values()) os << v << ' ';
    os << ") b=(";
    for (const auto& v : alpha.b_values()) os << v << ' ';
    os << ") c=(";
    for (const auto& v : alpha.c_values()) os << v << ' ';
    os << ')';
    return os.str();
}

} // namespace detail

/// Period 1: K_m = S_m(a, bc) (= a^m when bc = 0), and the printed one-period
/// display S_{m-1}(a, bc) equals K_{m-1}(alpha_{p+1}).
inline FixtureReport fixture_l1(std::uint64_t seed = 1, int instances = 50, long max_m = 8)
{
    FixtureReport report{"l=1", 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < instances; ++i) {
        const Rational a = random_small_rational(rng);
        const Rational b = random_small_rational(rng);
        // every fourth instance exercises the bc = 0 branch
        const Rational c = (i % 4 == 0) ? Rational(0) : random_small_rational(rng);
        const PeriodicAlpha<Rational> alpha({a}, {b}, {c}, 1);
        const Rational bc = b * c;
        for (long m = 1; m <= max_m; ++m) {
            const std::string tag = detail::describe(alpha, 1, m);
            detail::expect_equal(report, scaled_u(m, a, bc), continuant_det_oracle(alpha, 1, m), "K_m " + tag);
            detail::expect_equal(report, scaled_u(m - 1, a, bc), continuant_det_oracle(alpha, 2, m - 1),
                                 "K_{m-1} " + tag);
            if (bc == Rational(0))
                detail::expect_equal(report, ring_pow(a, static_cast<std::size_t>(m)),
                                     continuant_det_oracle(alpha, 1, m), "bc=0 branch " + tag);
        }
    }
    return report;
}

/// Period 2, arrays (a1, a2), (b1, b2), (c1, c2) anchored at index 1.
inline FixtureReport fixture_l2(std::uint64_t seed = 2, int instances = 50, long max_m = 6)
{
    FixtureReport report{"l=2", 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < instances; ++i) {
        auto a = random_rational_vector(rng, 2);
        auto b = random_rational_vector(rng, 2);
        auto c = random_rational_vector(rng, 2);
        if (i % 4 == 0) b[1] = Rational(0); // b2 = 0 branch
        const PeriodicAlpha<Rational> alpha(a, b, c, 1);
        const Rational &a1 = a[0], &a2 = a[1];
        const Rational b1c1 = b[0] * c[0], b2c2 = b[1] * c[1];
        const Rational tr = a1 * a2 - b1c1 - b2c2;
        const Rational det = b1c1 * b2c2;
        for (long p = 1; p <= 2; ++p) {
            const Mat2<Rational> A = transfer_matrix(alpha, p, 2);
            const Mat2<Rational> shown{a1 * a2 - alpha.b(p) * alpha.c(p), -(alpha.a(p) * alpha.b(p + 1) * alpha.c(p + 1)),
                                       alpha.a(p + 1), -(alpha.b(p + 1) * alpha.c(p + 1))};
            ++report.checks;
            if (!(A == shown)) report.mismatches.push_back("A_2 entries " + detail::describe(alpha, p, 1));
            detail::expect_equal(report, A.trace(), tr, "tr A_2 " + detail::describe(alpha, p, 1));
            detail::expect_equal(report, A.det(), det, "det A_2 " + detail::describe(alpha, p, 1));
            const Rational k2 = a1 * a2 - alpha.b(p) * alpha.c(p);
            for (long m = 1; m <= max_m; ++m) {
                const std::string tag = detail::describe(alpha, p, m);
                const auto [s1, s2] = scaled_u_pair(m - 1, tr, det);
                detail::expect_equal(report, s1 * k2 - det * s2, continuant_det_oracle(alpha, p, 2 * m), "K_2m " + tag);
                detail::expect_equal(report, s1 * alpha.a(p + 1), continuant_det_oracle(alpha, p + 1, 2 * m - 1),
                                     "K_2m-1 " + tag);
                if (det == Rational(0)) {
                    const Rational trpow = ring_pow(tr, static_cast<std::size_t>(m - 1));
                    detail::expect_equal(report, trpow * k2, continuant_det_oracle(alpha, p, 2 * m), "det=0 K_2m " + tag);
                    detail::expect_equal(report, trpow * alpha.a(p + 1),
                                         continuant_det_oracle(alpha, p + 1, 2 * m - 1), "det=0 K_2m-1 " + tag);
                }
            }
        }
    }
    return report;
}

/// Period 3: the three displays for K_{3m+1}(alpha_{p-1}), K_{3m}(alpha_p) and
/// K_{3m-1}(alpha_{p+1}), written out entry by entry.
inline FixtureReport fixture_l3(std::uint64_t seed = 3, int instances = 40, long max_m = 4)
{
    FixtureReport report{"l=3", 0, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < instances; ++i) {
        auto a = random_rational_vector(rng, 3);
        auto b = random_rational_vector(rng, 3);
        auto c = random_rational_vector(rng, 3);
        if (i % 5 == 0) c[2] = Rational(0);
        // base 1: a_1 = a[0], a_2 = a[1], a_3 = a[2] (= a_0 = a_{3m})
        const PeriodicAlpha<Rational> alpha(a, b, c, 1);
        auto A = [&](long m) { return alpha.a(m); };
        auto BC = [&](long m) { return alpha.b(m) * alpha.c(m); };
        const Rational tr = A(1) * A(2) * A(3) - A(1) * BC(2) - A(2) * BC(3) - A(3) * BC(1);
        const Rational det = BC(1) * BC(2) * BC(3);
        for (long p = 1; p <= 3; ++p) {
            const Rational top_left = A(1) * A(2) * A(3) - A(p + 2) * BC(p) - A(p) * BC(p + 1);
            const Rational top_right = -(A(p) * A(p + 1) * BC(p + 2)) + BC(p) * BC(p + 2);
            const Rational bottom_left = A(p + 1) * A(p + 2) - BC(p + 1);
            const Rational bottom_right = -(A(p + 1) * BC(p + 2));
            const Mat2<Rational> M = transfer_matrix(alpha, p, 3);
            ++report.checks;
            if (!(M == Mat2<Rational>{top_left, top_right, bottom_left, bottom_right}))
                report.mismatches.push_back("A_3 entries " + detail::describe(alpha, p, 1));
            detail::expect_equal(report, M.trace(), tr, "tr A_3 " + detail::describe(alpha, p, 1));
            detail::expect_equal(report, M.det(), det, "det A_3 " + detail::describe(alpha, p, 1));
            for (long m = 1; m <= max_m; ++m) {
                const std::string tag = detail::describe(alpha, p, m);
                const auto [s1, s2] = scaled_u_pair(m - 1, tr, det);
                const Rational k3m = s1 * top_left - det * s2;
                const Rational k3m1 = s1 * bottom_left;
                detail::expect_equal(report, k3m, continuant_det_oracle(alpha, p, 3 * m), "K_3m " + tag);
                detail::expect_equal(report, k3m1, continuant_det_oracle(alpha, p + 1, 3 * m - 1), "K_3m-1 " + tag);
                const Rational k3p1 = s1 * (A(p - 1) * top_left - BC(p - 1) * bottom_left) - det * s2 * A(p - 1);
                detail::expect_equal(report, k3p1, continuant_det_oracle(alpha, p - 1, 3 * m + 1), "K_3m+1 " + tag);
                detail::expect_equal(report, A(p - 1) * k3m - BC(p - 1) * k3m1,
                                     continuant_det_oracle(alpha, p - 1, 3 * m + 1), "K_3m+1 bilinear " + tag);
            }
        }
    }
    return report;
}

} // namespace contfrac
