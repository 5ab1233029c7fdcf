#pragma once

/**
 * @file laurent.hpp
 * @brief Integer-coefficient Laurent polynomials in one variable q.
 *
 * Stored densely: `low_` is the exponent of `coeffs_.front()`.  Canonical
 * form has no leading or trailing zero coefficients; the zero polynomial is
 * an empty coefficient vector with `low_ == 0`.  Z[q, q^-1] is an integral
 * domain whose units are +-q^k, which is what makes the exact division and
 * gcd below well defined.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "contfrac/rational.hpp"
#include "contfrac/ring.hpp"

namespace contfrac {

class LaurentPoly {
public:
    using exponent_type = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(BigInt(c), 0) {}
    LaurentPoly(long c) : LaurentPoly(BigInt(c), 0) {}
    explicit LaurentPoly(const BigInt& c) : LaurentPoly(c, 0) {}

    /// c * q^e
    LaurentPoly(const BigInt& c, exponent_type e)
    {
        if (c != 0) {
            low_ = e;
            coeffs_.push_back(c);
        }
    }

    /// Dense constructor: coeffs[i] is the coefficient of q^(low + i).
    LaurentPoly(exponent_type low, std::vector<BigInt> coeffs)
        : low_(low), coeffs_(std::move(coeffs))
    {
        normalize();
    }

    static LaurentPoly q() { return LaurentPoly(BigInt(1), 1); }
    static LaurentPoly monomial(const BigInt& c, exponent_type e) { return LaurentPoly(c, e); }

    bool is_zero() const { return coeffs_.empty(); }
    exponent_type lowest_exponent() const { return low_; }
    exponent_type highest_exponent() const
    {
        return low_ + static_cast<exponent_type>(coeffs_.size()) - 1;
    }
    std::size_t term_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
    }

    BigInt coefficient(exponent_type e) const
    {
        if (is_zero() || e < low_ || e > highest_exponent()) return 0;
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }
    const BigInt& leading_coefficient() const { return coeffs_.back(); }
    const BigInt& trailing_coefficient() const { return coeffs_.front(); }
    const std::vector<BigInt>& dense_coefficients() const { return coeffs_; }

    /// Nonzero terms in ascending exponent order.
    std::vector<std::pair<exponent_type, BigInt>> terms() const
    {
        std::vector<std::pair<exponent_type, BigInt>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<exponent_type>(i), coeffs_[i]);
        return out;
    }

    /// this * q^k
    LaurentPoly shifted(exponent_type k) const
    {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }

    /// Substitutes q -> q^-1.
    LaurentPoly inverted_variable() const
    {
        if (is_zero()) return {};
        std::vector<BigInt> rev(coeffs_.rbegin(), coeffs_.rend());
        return LaurentPoly(-highest_exponent(), std::move(rev));
    }

    /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const
    {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Divides every coefficient by d, which must divide all of them.
    LaurentPoly divided_by_integer(const BigInt& d) const
    {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        return r;
    }

    Rational evaluate(const Rational& x) const
    {
        if (is_zero()) return Rational(0);
        if (x == Rational(0) && low_ < 0)
            throw division_by_zero("negative power of q evaluated at q = 0");
        // Horner on the polynomial part, then multiply by x^low.
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
        if (low_ >= 0) return acc * ring_pow(x, static_cast<std::size_t>(low_));
        return acc / ring_pow(x, static_cast<std::size_t>(-low_));
    }

    double evaluate(double x) const
    {
        double acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
        return acc * std::pow(x, static_cast<double>(low_));
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) { return add(x, y, false); }
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return add(x, y, true); }

    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y)
    {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<BigInt> out(x.coeffs_.size() + y.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(), y.coeffs_[j].get_mpz_t());
        }
        return LaurentPoly(x.low_ + y.low_, std::move(out));
    }

    LaurentPoly& operator+=(const LaurentPoly& y) { return *this = *this + y; }
    LaurentPoly& operator-=(const LaurentPoly& y) { return *this = *this - y; }
    LaurentPoly& operator*=(const LaurentPoly& y) { return *this = *this * y; }

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y)
    {
        return x.low_ == y.low_ && x.coeffs_ == y.coeffs_;
    }

    /// Exact quotient x / y in Z[q, q^-1], or nullopt when y does not divide x.
    friend std::optional<LaurentPoly> try_exact_div(const LaurentPoly& x, const LaurentPoly& y)
    {
        if (y.is_zero()) throw division_by_zero("Laurent polynomial division by zero");
        if (x.is_zero()) return LaurentPoly{};
        if (x.coeffs_.size() < y.coeffs_.size()) return std::nullopt;
        // Long division of the polynomial parts from the top degree down.
        std::vector<BigInt> rem = x.coeffs_;
        const std::size_t ny = y.coeffs_.size();
        const std::size_t nq = rem.size() - ny + 1;
        std::vector<BigInt> quot(nq);
        const BigInt& lead = y.coeffs_.back();
        for (std::size_t k = nq; k-- > 0;) {
            BigInt& top = rem[k + ny - 1];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
            BigInt f;
            mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
            for (std::size_t j = 0; j < ny; ++j)
                mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), y.coeffs_[j].get_mpz_t());
            quot[k] = std::move(f);
        }
        for (const auto& c : rem)
            if (c != 0) return std::nullopt;
        return LaurentPoly(x.low_ - y.low_, std::move(quot));
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << x.str(); }

private:
    void normalize()
    {
        auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
        if (first == coeffs_.end()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        low_ += first - coeffs_.begin();
        coeffs_.erase(coeffs_.begin(), first);
        while (coeffs_.back() == 0) coeffs_.pop_back();
    }

    static LaurentPoly add(const LaurentPoly& x, const LaurentPoly& y, bool subtract)
    {
        if (y.is_zero()) return x;
        if (x.is_zero()) return subtract ? -y : y;
        const exponent_type lo = std::min(x.low_, y.low_);
        const exponent_type hi = std::max(x.highest_exponent(), y.highest_exponent());
        std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) out[static_cast<std::size_t>(x.low_ - lo) + i] = x.coeffs_[i];
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) {
            auto& slot = out[static_cast<std::size_t>(y.low_ - lo) + i];
            if (subtract) slot -= y.coeffs_[i];
            else slot += y.coeffs_[i];
        }
        return LaurentPoly(lo, std::move(out));
    }

    exponent_type low_ = 0;
    std::vector<BigInt> coeffs_;
};

/// Exact quotient; throws std::domain_error if y does not divide x.
inline LaurentPoly exact_div(const LaurentPoly& x, const LaurentPoly& y)
{
    auto r = try_exact_div(x, y);
    if (!r) throw std::domain_error("Laurent polynomial division is not exact");
    return *std::move(r);
}

inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

/// Content-free part with positive leading coefficient.
inline LaurentPoly primitive_part(const LaurentPoly& x)
{
    if (x.is_zero()) return x;
    LaurentPoly r = x.divided_by_integer(x.content());
    return r.leading_coefficient() < 0 ? -r : r;
}

/// Associate of x with lowest exponent 0 and positive leading coefficient.
inline LaurentPoly unit_normalized(const LaurentPoly& x)
{
    if (x.is_zero()) return x;
    LaurentPoly r = x.shifted(-x.lowest_exponent());
    return r.leading_coefficient() < 0 ? -r : r;
}

namespace detail {

/// lc(b)^(deg a - deg b + 1) * a mod b for ordinary polynomials (low exponent 0).
inline LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b)
{
    std::vector<BigInt> r = a.dense_coefficients();
    const auto& bc = b.dense_coefficients();
    const BigInt& lead = bc.back();
    const std::size_t nb = bc.size();
    while (r.size() >= nb) {
        BigInt top = r.back();
        const std::size_t shift = r.size() - nb;
        for (auto& c : r) c *= lead;
        for (std::size_t j = 0; j < nb; ++j) r[shift + j] -= top * bc[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return LaurentPoly(0, std::move(r));
}

} // namespace detail

/// gcd in Z[q, q^-1], normalized to lowest exponent 0 and positive leading
/// coefficient (unique up to the units +-q^k).
inline LaurentPoly gcd(const LaurentPoly& x, const LaurentPoly& y)
{
    if (x.is_zero()) return unit_normalized(y);
    if (y.is_zero()) return unit_normalized(x);
    BigInt cg;
    BigInt cx = x.content(), cy = y.content();
    mpz_gcd(cg.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    LaurentPoly a = primitive_part(x.shifted(-x.lowest_exponent()));
    LaurentPoly b = primitive_part(y.shifted(-y.lowest_exponent()));
    if (a.highest_exponent() < b.highest_exponent()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = detail::pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? r : primitive_part(r);
    }
    // Remainders may pick up factors of q; strip them since q is a unit.
    a = primitive_part(a.shifted(-a.lowest_exponent()));
    return a * LaurentPoly(cg);
}

/// Renders in ascending exponent order, e.g. "q^-1 + 1 + 2*q - q^3".
inline std::string LaurentPoly::str() const
{
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace contfrac
