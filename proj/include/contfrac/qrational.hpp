#pragma once

/**
 * @file qrational.hpp
 * @brief q-deformed integers, rationals and continued fractions, and the
 *        q-Fibonacci sequence.
 *
 * For r/s = [a_1, ..., a_{2n}] (regular continued fraction, even length),
 *
 *     [r/s]_q = [a_1]_q + q^{a_1} / ([a_2]_{q^-1} + q^{-a_2} / ([a_3]_q + ...)),
 *
 * which is the continuant quotient K_{2n}(alpha_1) / K_{2n-1}(alpha_2) for
 * a_p = [a_p]_{q^{(-1)^{p-1}}}, b_p = q^{(-1)^{p-1} a_p}, c_p = -1.
 */

#include <stdexcept>
#include <vector>

#include "contfrac/chebyshev.hpp"
#include "contfrac/continuant.hpp"
#include "contfrac/laurent.hpp"
#include "contfrac/laurent_fraction.hpp"
#include "contfrac/rational.hpp"

namespace contfrac {

using QRational = LaurentFraction;

/// [a]_q = 1 + q + ... + q^{a-1} (sign = +1) or the same in q^-1 (sign = -1).
inline LaurentPoly q_integer(long a, int sign = 1)
{
    if (a < 1) throw precondition_error("q_integer: a must be >= 1");
    if (sign != 1 && sign != -1) throw precondition_error("q_integer: sign must be +1 or -1");
    return LaurentPoly(sign > 0 ? 0 : -(a - 1), std::vector<BigInt>(static_cast<std::size_t>(a), BigInt(1)));
}

/// Even-length list of positive continued-fraction digits.
class CFDigits {
public:
    explicit CFDigits(std::vector<long> digits) : digits_(std::move(digits))
    {
        if (digits_.empty() || digits_.size() % 2 != 0)
            throw precondition_error("CFDigits: need a nonempty even number of digits");
        for (long d : digits_)
            if (d <= 0) throw precondition_error("CFDigits: digits must be positive");
    }

    const std::vector<long>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    long operator[](std::size_t i) const { return digits_[i]; }

    friend bool operator==(const CFDigits&, const CFDigits&) = default;

private:
    std::vector<long> digits_;
};

/// Euclid's algorithm, then [.., a_k] -> [.., a_k - 1, 1] if the length is odd.
inline CFDigits cf_digits(const BigInt& r, const BigInt& s)
{
    if (r <= 0 || s <= 0) throw precondition_error("cf_digits: r and s must be positive");
    if (r < s) throw precondition_error("cf_digits: r/s must be >= 1");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    if (g != 1) throw precondition_error("cf_digits: r and s must be coprime");
    if (r == 1 && s == 1) throw precondition_error("cf_digits: 1/1 has no even-length positive expansion");
    std::vector<long> d;
    BigInt x = r, y = s;
    while (y != 0) {
        BigInt quot = x / y;
        if (!quot.fits_slong_p()) throw precondition_error("cf_digits: digit too large");
        d.push_back(quot.get_si());
        BigInt rem = x % y;
        x = y;
        y = rem;
    }
    if (d.size() % 2 != 0) {
        d.back() -= 1;
        d.push_back(1);
    }
    return CFDigits(std::move(d));
}

inline CFDigits cf_digits(long r, long s) { return cf_digits(BigInt(r), BigInt(s)); }

/// Classical value of the continued fraction, bottom-up.
inline Rational classical_value(const CFDigits& digits)
{
    Rational v(digits[digits.size() - 1]);
    for (std::size_t i = digits.size() - 1; i-- > 0;) v = Rational(digits[i]) + Rational(1) / v;
    return v;
}

/// The continuant data alpha for the q-deformed continued fraction, base 1.
inline PeriodicAlpha<LaurentPoly> q_cf_alpha(const CFDigits& digits)
{
    std::vector<LaurentPoly> a, b, c;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1; // (-1)^{p-1} with p = i + 1
        a.push_back(q_integer(digits[i], sign));
        b.push_back(LaurentPoly(BigInt(1), sign * digits[i]));
        c.push_back(LaurentPoly(-1));
    }
    return PeriodicAlpha<LaurentPoly>(std::move(a), std::move(b), std::move(c), 1);
}

/// [r/s]_q as the normalised quotient K_{2n}(alpha_1) / K_{2n-1}(alpha_2).
inline QRational q_rational(const CFDigits& digits)
{
    const auto alpha = q_cf_alpha(digits);
    const long len = static_cast<long>(digits.size());
    return QRational(continuant_rec(alpha, 1, len), continuant_rec(alpha, 2, len - 1));
}

/// Constant digits a repeated 2n times, via the period-2 closed form
/// K_{2n}(alpha_p) = S_{n-1}(T, 1)([a]_q[a]_{q^-1} + q^{(-1)^{p-1} a}) - S_{n-2}(T, 1),
/// K_{2n-1}(alpha_{p+1}) = S_{n-1}(T, 1) [a]_{q^{(-1)^p}},
/// T = [a]_q [a]_{q^-1} + q^a + q^-a.  p selects the starting parity.
inline QRational q_rational_constant_closed(long a, long n, long p = 1)
{
    if (a < 1 || n < 1) throw precondition_error("q_rational_constant_closed: a, n must be >= 1");
    const LaurentPoly qa = q_integer(a, 1), qa_inv = q_integer(a, -1);
    const LaurentPoly t = qa * qa_inv + LaurentPoly(BigInt(1), a) + LaurentPoly(BigInt(1), -a);
    const int parity = ((p - 1) % 2 == 0) ? 1 : -1;
    const auto [s1, s2] = scaled_u_pair(n - 1, t, LaurentPoly(1));
    const LaurentPoly num = s1 * (qa * qa_inv + LaurentPoly(BigInt(1), parity * a)) - s2;
    const LaurentPoly den = s1 * q_integer(a, -parity);
    return QRational(num, den);
}

/// F_1 = F_2 = 1, F_{2m} = F_{2m-1} + q^-1 F_{2m-2}, F_{2m+1} = F_{2m} + q F_{2m-1}.
inline LaurentPoly q_fibonacci(long n)
{
    if (n < 1) throw precondition_error("q_fibonacci: n must be >= 1");
    LaurentPoly prev(1), cur(1); // F_1, F_2
    if (n <= 2) return cur;
    for (long k = 3; k <= n; ++k) {
        const long e = (k % 2 == 0) ? -1 : 1;
        LaurentPoly next = cur + prev.shifted(e);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// F_{2m+1} = S_{m-1}(T, 1)(1 + q) - S_{m-2}(T, 1) and F_{2m} = S_{m-1}(T, 1),
/// with T = 1 + q + q^-1 the trace of the period-2 transfer matrix.
inline LaurentPoly q_fibonacci_closed(long n)
{
    if (n < 1) throw precondition_error("q_fibonacci_closed: n must be >= 1");
    if (n == 1) return LaurentPoly(1);
    const LaurentPoly t = LaurentPoly(1) + LaurentPoly::q() + LaurentPoly(BigInt(1), -1);
    const long m = n / 2;
    const auto [s1, s2] = scaled_u_pair(m - 1, t, LaurentPoly(1));
    if (n % 2 == 0) return s1;
    return s1 * (LaurentPoly(1) + LaurentPoly::q()) - s2;
}

/// The q-Fibonacci specialisation a = (1, 1), b = (q, q^-1), c = (-1, -1), base 1.
inline PeriodicAlpha<LaurentPoly> q_fibonacci_alpha()
{
    return PeriodicAlpha<LaurentPoly>({LaurentPoly(1), LaurentPoly(1)},
                                      {LaurentPoly::q(), LaurentPoly(BigInt(1), -1)},
                                      {LaurentPoly(-1), LaurentPoly(-1)}, 1);
}

} // namespace contfrac
