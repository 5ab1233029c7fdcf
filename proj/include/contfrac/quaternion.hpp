#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "contfrac/chebyshev.hpp"
#include "contfrac/rational.hpp"

namespace contfrac {

/// a + b i + c j + d k with rational components.
struct Quaternion {
    Rational a, b, c, d;

    static Quaternion one() { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    /// a^2 + b^2 + c^2 + d^2, the determinant of the 2x2 complex realisation.
    Rational norm2() const { return a * a + b * b + c * c + d * d; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

    std::string str() const { return a.str() + "," + b.str() + "," + c.str() + "," + d.str(); }
    friend std::ostream& operator<<(std::ostream& os, const Quaternion& x) { return os << x.str(); }
};

/// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
inline Quaternion quat_mul(const Quaternion& x, const Quaternion& y)
{
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

inline Quaternion operator*(const Quaternion& x, const Quaternion& y) { return quat_mul(x, y); }

inline Quaternion quat_power_naive(const Quaternion& x, std::uint64_t n)
{
    Quaternion r = Quaternion::one();
    for (std::uint64_t i = 0; i < n; ++i) r = r * x;
    return r;
}

/// x^n = S_{n-1}(2a, N) x - N S_{n-2}(2a, N), N = |x|^2.
inline Quaternion quat_power_cheb(const Quaternion& x, std::uint64_t n)
{
    if (n == 0) return Quaternion::one();
    if (x.is_zero()) throw precondition_error("quat_power_cheb: zero quaternion");
    const Rational norm = x.norm2();
    const auto [s1, s2] = scaled_u_pair(static_cast<long>(n) - 1, Rational(2) * x.a, norm);
    return {x.a * s1 - norm * s2, x.b * s1, x.c * s1, x.d * s1};
}

} // namespace contfrac
