#pragma once

/**
 * @file io.hpp
 * @brief Text parsing and canonical printing of ring elements.
 *
 * Grammar (whitespace-insensitive):
 *
 *     rational := ['+'|'-'] digits ['/' digits]
 *     laurent  := term (('+'|'-') term)*
 *     term     := [digits ['*']] 'q' ['^' ['+'|'-'] digits] | digits
 *     modint   := ['+'|'-'] digits          (reduced into [0, modulus))
 *
 * Printing is canonical: reduced rationals, Laurent terms in ascending
 * exponent order, residues in [0, modulus).  `parse_element<R>(to_text(x))`
 * returns x for every ring.
 */

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "contfrac/laurent.hpp"
#include "contfrac/laurent_fraction.hpp"
#include "contfrac/modint.hpp"
#include "contfrac/rational.hpp"

namespace contfrac {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

inline bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

inline BigInt parse_signed_integer(std::string_view s, std::string_view original)
{
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw parse_error("not an integer: '" + std::string(original) + "'");
    BigInt v{std::string(body)};
    return negative ? BigInt(-v) : v;
}

inline LaurentPoly parse_laurent_term(std::string_view term, std::string_view original)
{
    bool negative = false;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
        negative = term.front() == '-';
        term.remove_prefix(1);
    }
    if (term.empty()) throw parse_error("empty term in '" + std::string(original) + "'");
    const auto qpos = term.find('q');
    BigInt coeff = 1;
    LaurentPoly::exponent_type exponent = 0;
    if (qpos == std::string_view::npos) {
        if (!all_digits(term)) throw parse_error("bad term '" + std::string(term) + "' in '" + std::string(original) + "'");
        coeff = BigInt(std::string(term));
    } else {
        std::string_view head = term.substr(0, qpos);
        std::string_view tail = term.substr(qpos + 1);
        if (!head.empty() && head.back() == '*') head.remove_suffix(1);
        if (!head.empty()) {
            if (!all_digits(head)) throw parse_error("bad coefficient '" + std::string(head) + "' in '" + std::string(original) + "'");
            coeff = BigInt(std::string(head));
        }
        exponent = 1;
        if (!tail.empty()) {
            if (tail.front() != '^') throw parse_error("expected '^' after q in '" + std::string(original) + "'");
            tail.remove_prefix(1);
            BigInt e = parse_signed_integer(tail, original);
            if (!e.fits_slong_p()) throw parse_error("exponent out of range in '" + std::string(original) + "'");
            exponent = e.get_si();
        }
    }
    return LaurentPoly(negative ? BigInt(-coeff) : coeff, exponent);
}

} // namespace detail

template <class R>
R parse_element(std::string_view text);

template <>
inline Rational parse_element<Rational>(std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_signed_integer(s, text));
    BigInt num = detail::parse_signed_integer(std::string_view(s).substr(0, slash), text);
    std::string_view den_text = std::string_view(s).substr(slash + 1);
    if (!detail::all_digits(den_text)) throw parse_error("bad denominator in '" + std::string(text) + "'");
    BigInt den(std::string{den_text});
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

template <>
inline LaurentPoly parse_element<LaurentPoly>(std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw parse_error("empty Laurent polynomial");
    LaurentPoly sum;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        const bool boundary = i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^');
        if (!boundary) continue;
        sum += detail::parse_laurent_term(std::string_view(s).substr(start, i - start), text);
        start = i;
    }
    return sum;
}

template <>
inline LaurentFraction parse_element<LaurentFraction>(std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    if (s.empty() || s.front() != '(') return LaurentFraction(parse_element<LaurentPoly>(s));
    const auto split = s.find(")/(");
    if (split == std::string::npos || s.back() != ')')
        throw parse_error("expected '(num)/(den)' in '" + std::string(text) + "'");
    return LaurentFraction(parse_element<LaurentPoly>(s.substr(1, split - 1)),
                           parse_element<LaurentPoly>(s.substr(split + 3, s.size() - split - 4)));
}

template <class R>
    requires requires { R::modulus; }
R parse_modint(std::string_view text)
{
    return R(detail::parse_signed_integer(detail::strip_spaces(text), text));
}

template <>
inline ModInt<> parse_element<ModInt<>>(std::string_view text) { return parse_modint<ModInt<>>(text); }

template <class R>
std::string to_text(const R& x) { return x.str(); }

} // namespace contfrac
