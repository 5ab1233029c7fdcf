#pragma once

/**
 * @file continuant.hpp
 * @brief Continuants K_n(alpha_p): the determinant of the n x n tridiagonal
 *        matrix with diagonal a_p..a_{p+n-1}, superdiagonal b_p..b_{p+n-2}
 *        and subdiagonal c_p..c_{p+n-2}.
 *
 * Conventions: K_{-1} = 0, K_0 = 1, K_1 = a_p.
 *
 * Two independent determinant oracles (Bareiss elimination on the dense
 * matrix, and the Leibniz permutation sum for small n) check the recurrence
 *
 *     K_n(alpha_p) = a_p K_{n-1}(alpha_{p+1}) - b_p c_p K_{n-2}(alpha_{p+2})
 *
 * and the transfer-matrix factorisation
 *
 *     A_n(alpha_p) = L(a_p, -b_p c_p) ... L(a_{p+n-1}, -b_{p+n-1} c_{p+n-1}),
 *     L(x, y) = [[x, y], [1, 0]].
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "contfrac/mat2.hpp"
#include "contfrac/ring.hpp"

namespace contfrac {

/// l-periodic coefficient sequences (a_m, b_m, c_m), m in Z.
///
/// The stored arrays hold one period starting at index `base`, so
/// a_m = a[(m - base) mod l] for every integer m, negative included.
template <Ring R>
class PeriodicAlpha {
public:
    PeriodicAlpha(std::vector<R> a, std::vector<R> b, std::vector<R> c, long base = 1)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), base_(base)
    {
        if (a_.empty()) throw precondition_error("PeriodicAlpha: period must be >= 1");
        if (b_.size() != a_.size() || c_.size() != a_.size())
            throw precondition_error("PeriodicAlpha: a, b, c must all have length l");
    }

    long period() const { return static_cast<long>(a_.size()); }
    long base() const { return base_; }

    const R& a(long m) const { return a_[slot(m)]; }
    const R& b(long m) const { return b_[slot(m)]; }
    const R& c(long m) const { return c_[slot(m)]; }

    /// -b_m c_m, the off-diagonal weight of the transfer factor at m.
    R weight(long m) const { return -(b(m) * c(m)); }

    const std::vector<R>& a_values() const { return a_; }
    const std::vector<R>& b_values() const { return b_; }
    const std::vector<R>& c_values() const { return c_; }

    /// Same sequences, arrays re-anchored so that index 0 holds position k.
    PeriodicAlpha rebased(long k) const
    {
        const auto s = static_cast<std::ptrdiff_t>(slot(k));
        auto rot = [s](std::vector<R> v) {
            std::rotate(v.begin(), v.begin() + s, v.end());
            return v;
        };
        return PeriodicAlpha(rot(a_), rot(b_), rot(c_), k);
    }

    /// Coefficient-wise image in another ring.
    template <Ring S, class F>
    PeriodicAlpha<S> map(F&& f) const
    {
        std::vector<S> a, b, c;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a.push_back(f(a_[i]));
            b.push_back(f(b_[i]));
            c.push_back(f(c_[i]));
        }
        return PeriodicAlpha<S>(std::move(a), std::move(b), std::move(c), base_);
    }

    friend bool operator==(const PeriodicAlpha&, const PeriodicAlpha&) = default;

private:
    std::size_t slot(long m) const
    {
        const long l = period();
        long r = (m - base_) % l;
        if (r < 0) r += l;
        return static_cast<std::size_t>(r);
    }

    std::vector<R> a_, b_, c_;
    long base_;
};

/// Column pair (K_{n+1}(alpha_p), K_n(alpha_{p+1})).
template <Ring R>
struct KVector {
    R top;
    R bottom;
    friend bool operator==(const KVector&, const KVector&) = default;
};

template <Ring R>
using DenseMatrix = std::vector<std::vector<R>>;

/// The n x n tridiagonal matrix T_n(alpha_p), materialised densely.
template <Ring R>
DenseMatrix<R> tridiagonal_matrix(const PeriodicAlpha<R>& alpha, long p, long n)
{
    const auto size = static_cast<std::size_t>(std::max(n, 0L));
    DenseMatrix<R> T(size, std::vector<R>(size, R(0)));
    for (std::size_t i = 0; i < size; ++i) {
        const long m = p + static_cast<long>(i);
        T[i][i] = alpha.a(m);
        if (i + 1 < size) {
            T[i][i + 1] = alpha.b(m);
            T[i + 1][i] = alpha.c(m);
        }
    }
    return T;
}

/// Fraction-free Gaussian elimination with row pivoting.  Each exact_div is
/// exact because intermediate entries are minors of the input.
template <IntegralDomain R>
R bareiss_determinant(DenseMatrix<R> M)
{
    const std::size_t n = M.size();
    if (n == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(M[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(M[r][k])) ++r;
            if (r == n) return R(0);
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        const R& pivot = M[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const bool lead_zero = is_zero(M[i][k]);
            for (std::size_t j = k + 1; j < n; ++j) {
                // (pivot * m_ij - m_ik * m_kj) / prev; skip structural zeros.
                if (lead_zero || is_zero(M[k][j])) {
                    if (!is_zero(M[i][j])) M[i][j] = exact_div(pivot * M[i][j], prev);
                } else {
                    M[i][j] = exact_div(pivot * M[i][j] - M[i][k] * M[k][j], prev);
                }
            }
            M[i][k] = R(0);
        }
        prev = M[k][k];
    }
    R det = M[n - 1][n - 1];
    return negate ? -det : det;
}

/// Sum over all n! permutations; the maximally independent oracle for small n.
template <Ring R>
R leibniz_determinant(const DenseMatrix<R>& M)
{
    const std::size_t n = M.size();
    if (n > 8) throw precondition_error("leibniz_determinant: n > 8 is not supported");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    R total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        R term(1);
        for (std::size_t i = 0; i < n && !is_zero(term); ++i) term = term * M[i][perm[i]];
        total = (inversions % 2 == 0) ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// K_n(alpha_p) as det T_n by Bareiss elimination.
template <IntegralDomain R>
R continuant_det_oracle(const PeriodicAlpha<R>& alpha, long p, long n)
{
    if (n < -1) throw precondition_error("continuant: n must be >= -1");
    if (n == -1) return R(0);
    return bareiss_determinant(tridiagonal_matrix(alpha, p, n));
}

/// K_n(alpha_p) as det T_n by the Leibniz sum (n <= 8).
template <Ring R>
R continuant_leibniz(const PeriodicAlpha<R>& alpha, long p, long n)
{
    if (n < -1) throw precondition_error("continuant: n must be >= -1");
    if (n == -1) return R(0);
    return leibniz_determinant(tridiagonal_matrix(alpha, p, n));
}

/// K_n(alpha_p) from the first-index recurrence, unrolled from the high end:
/// k_{j+1}(alpha_m) = L(a_m, -b_m c_m) k_j(alpha_{m+1}), starting at
/// k_0(alpha_{p+n}) = (1, 0).  O(n) ring operations, O(1) space.
template <Ring R>
R continuant_rec(const PeriodicAlpha<R>& alpha, long p, long n)
{
    if (n < -1) throw precondition_error("continuant: n must be >= -1");
    if (n == -1) return R(0);
    R top(1), bottom(0);
    for (long m = p + n - 1; m >= p; --m) {
        R next = alpha.a(m) * top + alpha.weight(m) * bottom;
        bottom = std::move(top);
        top = std::move(next);
    }
    return top;
}

/// K_n(alpha_p) from the last-index recurrence
/// K_k = a_{p+k-1} K_{k-1} - b_{p+k-2} c_{p+k-2} K_{k-2}, run left to right.
template <Ring R>
R continuant_rec_forward(const PeriodicAlpha<R>& alpha, long p, long n)
{
    if (n < -1) throw precondition_error("continuant: n must be >= -1");
    if (n == -1) return R(0);
    R prev(0), cur(1);
    for (long k = 1; k <= n; ++k) {
        R next = alpha.a(p + k - 1) * cur;
        if (k >= 2) next = next + alpha.weight(p + k - 2) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// L(a_m, -b_m c_m)
template <Ring R>
Mat2<R> transfer_factor(const PeriodicAlpha<R>& alpha, long m)
{
    return {alpha.a(m), alpha.weight(m), R(1), R(0)};
}

/// A_n(alpha_p) = L(a_p, .) L(a_{p+1}, .) ... L(a_{p+n-1}, .); A_0 = E.
template <Ring R>
Mat2<R> transfer_matrix(const PeriodicAlpha<R>& alpha, long p, long n)
{
    if (n < 0) throw precondition_error("transfer_matrix: n must be >= 0");
    Mat2<R> A = Mat2<R>::identity();
    for (long m = p; m < p + n; ++m) A = A * transfer_factor(alpha, m);
    return A;
}

/// k_n(alpha_p) = (K_n(alpha_p), K_{n-1}(alpha_{p+1})) for n >= 0.
template <Ring R>
KVector<R> k_vector(const PeriodicAlpha<R>& alpha, long p, long n)
{
    if (n < 0) throw precondition_error("k_vector: n must be >= 0");
    return {continuant_rec(alpha, p, n), continuant_rec(alpha, p + 1, n - 1)};
}

/// Checks k_{n+1}(alpha_p) = A_m(alpha_p) k_{n+1-m}(alpha_{p+m}), 0 <= m <= n.
template <Ring R>
bool shift_check(const PeriodicAlpha<R>& alpha, long p, long n, long m)
{
    if (m < 0 || m > n) throw precondition_error("shift_check: need 0 <= m <= n");
    const KVector<R> lhs = k_vector(alpha, p, n + 1);
    const KVector<R> inner = k_vector(alpha, p + m, n + 1 - m);
    const auto [top, bottom] = transfer_matrix(alpha, p, m).apply(inner.top, inner.bottom);
    return lhs.top == top && lhs.bottom == bottom;
}

/// a_p + b_p/(a_{p+1} + b_{p+1}/(... + b_{p+n-2}/a_{p+n-1})), evaluated from
/// the bottom up.  Requires c_m = -1 for every m.
///
/// Throws division_by_zero whose level() is the depth i (1-based, counted
/// from the top) of the partial denominator that vanished.
template <Field R>
R cf_eval(const PeriodicAlpha<R>& alpha, long p, long n)
{
    if (n < 1) throw precondition_error("cf_eval: n must be >= 1");
    for (const auto& c : alpha.c_values())
        if (c != R(-1)) throw precondition_error("cf_eval: requires c_m = -1 for all m");
    R value = alpha.a(p + n - 1);
    for (long i = n - 1; i >= 1; --i) {
        if (is_zero(value))
            throw division_by_zero("cf_eval: zero partial denominator at level " + std::to_string(i), i);
        value = alpha.a(p + i - 1) + alpha.b(p + i - 1) / value;
    }
    return value;
}

} // namespace contfrac
