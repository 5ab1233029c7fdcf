#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "contfrac/laurent.hpp"

namespace contfrac {

/// Element of the fraction field of Z[q, q^-1].
///
/// Canonical form: numerator and denominator coprime, denominator with
/// lowest exponent 0 and positive leading coefficient.  Zero is 0/1.
class LaurentFraction {
public:
    LaurentFraction() : num_(0), den_(1) {}
    LaurentFraction(int c) : num_(c), den_(1) {}
    LaurentFraction(long c) : num_(c), den_(1) {}
    LaurentFraction(LaurentPoly p) : num_(std::move(p)), den_(1) { reduce(); }

    LaurentFraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw division_by_zero("fraction with zero denominator");
        reduce();
    }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational evaluate(const Rational& x) const
    {
        Rational d = den_.evaluate(x);
        if (d == Rational(0)) throw division_by_zero("denominator vanishes at evaluation point");
        return num_.evaluate(x) / d;
    }

    LaurentFraction operator-() const { return raw(-num_, den_); }

    friend LaurentFraction operator+(const LaurentFraction& x, const LaurentFraction& y)
    {
        if (x.den_ == y.den_) return LaurentFraction(x.num_ + y.num_, x.den_);
        return LaurentFraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend LaurentFraction operator-(const LaurentFraction& x, const LaurentFraction& y) { return x + (-y); }
    friend LaurentFraction operator*(const LaurentFraction& x, const LaurentFraction& y)
    {
        return LaurentFraction(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend LaurentFraction operator/(const LaurentFraction& x, const LaurentFraction& y)
    {
        if (y.is_zero()) throw division_by_zero("division by the zero fraction");
        return LaurentFraction(x.num_ * y.den_, x.den_ * y.num_);
    }

    friend bool operator==(const LaurentFraction& x, const LaurentFraction& y)
    {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    std::string str() const
    {
        if (den_ == LaurentPoly(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const LaurentFraction& x) { return os << x.str(); }

private:
    static LaurentFraction raw(LaurentPoly n, LaurentPoly d)
    {
        LaurentFraction f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }

    void reduce()
    {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        LaurentPoly g = gcd(num_, den_);
        if (g != LaurentPoly(1)) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        const auto shift = -den_.lowest_exponent();
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
        if (den_.leading_coefficient() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline LaurentFraction exact_div(const LaurentFraction& x, const LaurentFraction& y) { return x / y; }
inline bool is_zero(const LaurentFraction& x) { return x.is_zero(); }

} // namespace contfrac
