#pragma once

#include <cstdint>
#include <ostream>
#include <utility>

#include "contfrac/chebyshev.hpp"
#include "contfrac/ring.hpp"

namespace contfrac {

/// Row-major 2x2 matrix [[a, b], [c, d]] over a ring.
template <Ring R>
struct Mat2 {
    R a{0}, b{0}, c{0}, d{0};

    static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }
    static Mat2 scalar(const R& s) { return {s, R(0), R(0), s}; }

    R trace() const { return a + d; }
    R det() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
    friend Mat2 operator*(const R& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

    /// Applies the matrix to the column vector (top, bottom).
    std::pair<R, R> apply(const R& top, const R& bottom) const
    {
        return {a * top + b * bottom, c * top + d * bottom};
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Mat2& m)
    {
        return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
    }
};

template <Ring R>
Mat2<R> mat_mul(const Mat2<R>& x, const Mat2<R>& y) { return x * y; }

/// A^m by m - 1 successive multiplications.
template <Ring R>
Mat2<R> mat_power_naive(const Mat2<R>& A, std::uint64_t m)
{
    Mat2<R> result = Mat2<R>::identity();
    for (std::uint64_t i = 0; i < m; ++i) result = result * A;
    return result;
}

/// A^m by binary exponentiation, O(log m) matrix products.
template <Ring R>
Mat2<R> mat_power_binary(Mat2<R> A, std::uint64_t m)
{
    Mat2<R> result = Mat2<R>::identity();
    bool started = false;
    while (m != 0) {
        if (m & 1u) {
            result = started ? result * A : A;
            started = true;
        }
        m >>= 1;
        if (m != 0) A = A * A;
    }
    return result;
}

/// Cayley-Hamilton power: A^m = S_{m-1}(tr, det) A - det S_{m-2}(tr, det) E.
///
/// One code path covers det A = 0 as well, since S_k(t, 0) = t^k.
template <Ring R>
Mat2<R> mat_power_cheb(const Mat2<R>& A, std::uint64_t m)
{
    if (m == 0) return Mat2<R>::identity();
    const R t = A.trace();
    const R det = A.det();
    const auto [s1, s2] = scaled_u_pair(static_cast<long>(m) - 1, t, det);
    return s1 * A - Mat2<R>::scalar(det * s2);
}

/// (S_m, S_{m-1}) in O(log m) ring operations, from powers of the companion
/// matrix [[t, -d], [1, 0]] acting on (S_0, S_{-1}) = (1, 0).
template <Ring R>
std::pair<R, R> scaled_u_pair_log(long m, const R& t, const R& d)
{
    if (m < -1) throw precondition_error("scaled_u: index must be >= -1");
    if (m == -1) return {R(0), R(0)};
    const Mat2<R> companion{t, -d, R(1), R(0)};
    const Mat2<R> p = mat_power_binary(companion, static_cast<std::uint64_t>(m));
    return {p.a, p.c};
}

} // namespace contfrac
