#pragma once

/**
 * @file ring.hpp
 * @brief The ring contract every algorithm in contfrac is generic over.
 *
 * A ring element type is a regular value type constructible from `int`
 * (so `R(0)` and `R(1)` are the identities) with `+ - *` and unary minus.
 * A field additionally supplies `/`.  Types used by the Bareiss oracle must
 * also provide an `exact_div(x, y)` overload found by ADL: for fields this
 * is plain division, for integral domains such as LaurentPoly it is the
 * exact quotient.
 *
 * Distinct ring instances are distinct C++ types, so mixing them is a
 * compile-time error rather than a runtime check.
 */

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace contfrac {

using BigInt = mpz_class;

/// Thrown when a divisor is zero; `level()` is a caller-defined position
/// (for continued fractions, the depth at which the zero appeared).
class division_by_zero : public std::domain_error {
public:
    explicit division_by_zero(const std::string& what, long level = -1)
        : std::domain_error(what), level_(level) {}
    long level() const noexcept { return level_; }

private:
    long level_;
};

/// Thrown when a documented precondition of an operation is violated.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class T>
concept Ring = std::regular<T> && std::constructible_from<T, int> &&
    requires(const T& x, const T& y) {
        { x + y } -> std::convertible_to<T>;
        { x - y } -> std::convertible_to<T>;
        { x * y } -> std::convertible_to<T>;
        { -x } -> std::convertible_to<T>;
    };

template <class T>
concept Field = Ring<T> && requires(const T& x, const T& y) {
    { x / y } -> std::convertible_to<T>;
};

template <class T>
concept IntegralDomain = Ring<T> && requires(const T& x, const T& y) {
    { exact_div(x, y) } -> std::convertible_to<T>;
};

template <Ring R>
R ring_zero() { return R(0); }

template <Ring R>
R ring_one() { return R(1); }

template <Ring R>
bool is_zero(const R& x) { return x == R(0); }

/// x^e by square-and-multiply, e >= 0.
template <Ring R>
R ring_pow(R base, std::size_t e)
{
    R result(1);
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

} // namespace contfrac
