#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "contfrac/ring.hpp"

namespace contfrac {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    explicit Rational(const BigInt& n) : v_(n) {}

    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
    friend Rational operator/(const Rational& x, const Rational& y)
    {
        if (sgn(y.v_) == 0) throw division_by_zero("rational division by zero");
        return Rational(mpq_class(x.v_ / y.v_));
    }

    Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
    Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
    Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y)
    {
        int c = cmp(x.v_, y.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string str() const
    {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

inline Rational exact_div(const Rational& x, const Rational& y) { return x / y; }
inline bool is_zero(const Rational& x) { return x.sign() == 0; }

} // namespace contfrac
