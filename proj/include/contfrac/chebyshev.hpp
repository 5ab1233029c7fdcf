#pragma once

/**
 * @file chebyshev.hpp
 * @brief Chebyshev polynomials of the second kind and their square-root-free
 *        bivariate form.
 *
 * U_n(x) is produced three independent ways (three-term recurrence, the
 * terminating hypergeometric sum, the generating function 1/(1 - 2xu + u^2)).
 *
 * The scaled form S_m(t, d) is h_m(r+, r-) where r+ and r- are the roots
 * of z^2 - t z + d, i.e.
 *
 *     S_{-1} = 0,  S_0 = 1,  S_k = t S_{k-1} - d S_{k-2},
 *
 * and equals d^(m/2) U_m(t / (2 sqrt d)) whenever the right side makes
 * sense.  Every closed form in this library goes through S so that no square
 * root is ever taken.
 */

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contfrac/rational.hpp"
#include "contfrac/ring.hpp"

namespace contfrac {

/// Dense integer coefficients of U_n(x), ascending degree.
struct ChebU {
    int n = 0;
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const ChebU&, const ChebU&) = default;
};

/// U_n by U_{k+1} = 2x U_k - U_{k-1}.  U_{-1} = 0 (empty list), U_{-2} = -1.
inline ChebU u_coeffs(int n)
{
    if (n < -2) throw precondition_error("u_coeffs: n must be >= -2");
    if (n == -2) return {n, {BigInt(-1)}};
    if (n == -1) return {n, {}};
    std::vector<BigInt> prev;            // U_{-1}
    std::vector<BigInt> cur{BigInt(1)};  // U_0
    for (int k = 0; k < n; ++k) {
        std::vector<BigInt> next(cur.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, std::move(cur)};
}

/// U_n(x) = (n+1) 2F1(-n, n+2; 3/2; (1-x)/2), expanded term by term in exact
/// rationals and then in powers of x.
inline ChebU u_coeffs_hypergeometric(int n)
{
    if (n < 0) throw precondition_error("u_coeffs_hypergeometric: n must be >= 0");
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    std::vector<Rational> poly(size, Rational(0));
    // ((1 - x)/2)^k, ascending coefficients, updated incrementally
    std::vector<Rational> zpow{Rational(1)};
    // term_k = (-n)_k (n+2)_k / (k! (3/2)_k) * (n+1)
    Rational term(n + 1);
    for (int k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i < zpow.size(); ++i) poly[i] += term * zpow[i];
        // advance term to k+1
        term = term * Rational(k - n) * Rational(n + 2 + k) / (Rational(k + 1) * Rational(2 * k + 3, 2));
        std::vector<Rational> next(zpow.size() + 1, Rational(0));
        for (std::size_t i = 0; i < zpow.size(); ++i) {
            next[i] += zpow[i] * Rational(1, 2);
            next[i + 1] -= zpow[i] * Rational(1, 2);
        }
        zpow = std::move(next);
    }
    ChebU out{n, {}};
    out.coeffs.reserve(size);
    for (const auto& c : poly) {
        assert(c.is_integer() && "hypergeometric sum must have integer coefficients");
        if (!c.is_integer()) throw std::logic_error("u_coeffs_hypergeometric: non-integer coefficient");
        out.coeffs.push_back(c.num());
    }
    return out;
}

/// Coefficient of u^n in the power series of 1/(1 - 2xu + u^2) over Z[x],
/// obtained by summing the truncated geometric series sum_j w^j with
/// w = 2xu - u^2, every power computed by series multiplication mod u^(max_deg+1).
inline ChebU u_genfun_coeff(int n, int max_deg)
{
    if (n < 0 || n > max_deg) throw precondition_error("u_genfun_coeff: need 0 <= n <= max_deg");
    using Poly = std::vector<BigInt>;  // in x, ascending
    using Series = std::vector<Poly>;  // in u, ascending, truncated
    const std::size_t len = static_cast<std::size_t>(max_deg) + 1;

    auto poly_mul = [](const Poly& a, const Poly& b) {
        if (a.empty() || b.empty()) return Poly{};
        Poly r(a.size() + b.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto poly_add = [](Poly& acc, const Poly& p) {
        if (acc.size() < p.size()) acc.resize(p.size(), BigInt(0));
        for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
    };
    auto series_mul = [&](const Series& a, const Series& b) {
        Series r(len);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) poly_add(r[i + j], poly_mul(a[i], b[j]));
        return r;
    };

    Series w(len);
    if (len > 1) w[1] = {BigInt(0), BigInt(2)};
    if (len > 2) w[2] = {BigInt(-1)};
    Series sum(len), power(len);
    sum[0] = power[0] = {BigInt(1)};
    // w has no constant term, so w^j contributes only from u^j on.
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
        power = series_mul(power, w);
        for (std::size_t i = 0; i < len; ++i) poly_add(sum[i], power[i]);
    }
    Poly c = sum[static_cast<std::size_t>(n)];
    while (!c.empty() && c.back() == 0) c.pop_back();
    return {n, std::move(c)};
}

/// h_n(x, y) = sum_{i+j=n} x^i y^j, summed monomial by monomial; h_{-1} = 0.
template <Ring R>
R complete_homogeneous(int n, const R& x, const R& y)
{
    if (n < -1) throw precondition_error("complete_homogeneous: n must be >= -1");
    if (n == -1) return R(0);
    std::vector<R> ypow{R(1)};
    for (int j = 1; j <= n; ++j) ypow.push_back(ypow.back() * y);
    R sum(0);
    R xpow(1);
    for (int i = n; i >= 0; --i) {
        sum = sum + xpow * ypow[static_cast<std::size_t>(i)];
        xpow = xpow * x;
    }
    return sum;
}

/// (S_k, S_{k-1}) for k >= -1, in O(k) ring operations.
template <Ring R>
std::pair<R, R> scaled_u_pair(long k, const R& t, const R& d)
{
    if (k < -1) throw precondition_error("scaled_u: index must be >= -1");
    if (k == -1) {
        // S_{-2} is -1/d, which is never needed by callers; return 0 as a
        // placeholder so the pair stays inside the ring.
        return {R(0), R(0)};
    }
    R prev(0), cur(1);
    for (long i = 0; i < k; ++i) {
        R next = t * cur - d * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {std::move(cur), std::move(prev)};
}

/// S_m(t, d) for m >= -1.
template <Ring R>
R scaled_u(long m, const R& t, const R& d)
{
    return scaled_u_pair(m, t, d).first;
}

/// Evaluates U_n at x by the three-term recurrence (n >= -2); meaningful for
/// floating-point R as well as exact rings.
template <Ring R>
R u_value(long n, const R& x)
{
    if (n == -2) return R(-1);
    return scaled_u(n, R(2) * x, R(1));
}

/// Checks 2x U_n = U_{n+1} + U_{n-1} on exact coefficient lists.
inline bool pieri_check(int n)
{
    if (n < 0) throw precondition_error("pieri_check: n must be >= 0");
    const ChebU un = u_coeffs(n), up = u_coeffs(n + 1), um = u_coeffs(n - 1);
    std::vector<BigInt> lhs(static_cast<std::size_t>(n) + 2, BigInt(0));
    for (std::size_t i = 0; i < un.coeffs.size(); ++i) lhs[i + 1] = 2 * un.coeffs[i];
    std::vector<BigInt> rhs = up.coeffs;
    rhs.resize(lhs.size(), BigInt(0));
    for (std::size_t i = 0; i < um.coeffs.size(); ++i) rhs[i] += um.coeffs[i];
    return lhs == rhs;
}

} // namespace contfrac
