#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "contfrac/ring.hpp"

namespace contfrac {

/// Default benchmark modulus, the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kDefaultModulus = (std::uint64_t{1} << 61) - 1;

/// Residue class modulo a fixed odd prime below 2^63.
template <std::uint64_t Modulus = kDefaultModulus>
class ModInt {
    static_assert(Modulus > 2 && Modulus % 2 == 1, "modulus must be an odd prime");
    static_assert(Modulus < (std::uint64_t{1} << 63), "modulus must fit in 63 bits");

public:
    static constexpr std::uint64_t modulus = Modulus;

    constexpr ModInt() = default;
    constexpr ModInt(int v) : r_(reduce_signed(v)) {}
    constexpr ModInt(long v) : r_(reduce_signed(v)) {}
    constexpr ModInt(long long v) : r_(reduce_signed(v)) {}
    explicit ModInt(const BigInt& v)
        : r_(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(Modulus))) {}

    static constexpr ModInt from_residue(std::uint64_t r) { ModInt x; x.r_ = r % Modulus; return x; }

    constexpr std::uint64_t residue() const { return r_; }

    constexpr ModInt operator-() const { return from_residue(r_ == 0 ? 0 : Modulus - r_); }

    friend constexpr ModInt operator+(ModInt x, ModInt y)
    {
        std::uint64_t s = x.r_ + y.r_;
        if (s >= Modulus) s -= Modulus;
        return raw(s);
    }
    friend constexpr ModInt operator-(ModInt x, ModInt y)
    {
        return raw(x.r_ >= y.r_ ? x.r_ - y.r_ : x.r_ + Modulus - y.r_);
    }
    friend constexpr ModInt operator*(ModInt x, ModInt y)
    {
        return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(x.r_) * y.r_ % Modulus));
    }
    friend ModInt operator/(ModInt x, ModInt y) { return x * y.inverse(); }

    constexpr ModInt pow(std::uint64_t e) const
    {
        ModInt base = *this, result = raw(1);
        while (e != 0) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    ModInt inverse() const
    {
        if (r_ == 0) throw division_by_zero("modular inverse of zero");
        return pow(Modulus - 2);
    }

    friend constexpr bool operator==(ModInt x, ModInt y) = default;

    std::string str() const { return std::to_string(r_); }
    friend std::ostream& operator<<(std::ostream& os, ModInt x) { return os << x.r_; }

private:
    static constexpr ModInt raw(std::uint64_t r) { ModInt x; x.r_ = r; return x; }

    template <class I>
    static constexpr std::uint64_t reduce_signed(I v)
    {
        long long s = static_cast<long long>(v);
        long long m = static_cast<long long>(Modulus);
        long long r = s % m;
        return static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }

    std::uint64_t r_ = 0;
};

template <std::uint64_t M>
ModInt<M> exact_div(ModInt<M> x, ModInt<M> y) { return x / y; }

} // namespace contfrac
