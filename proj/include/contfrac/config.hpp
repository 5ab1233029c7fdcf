#pragma once

/**
 * @file config.hpp
 * @brief Coefficient configuration files for the command-line tool.
 *
 * One `key = value` per line, `#` starts a comment, blank lines ignored:
 *
 *     ring = laurent          # rational | laurent | modint
 *     l = 2
 *     a = [1, 1]
 *     b = [q, q^-1]
 *     c = [-1, -1]
 *     p = 1                   # optional, default 1
 *
 * See docs/config.md for the full grammar.
 */

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "contfrac/continuant.hpp"
#include "contfrac/io.hpp"

namespace contfrac {

enum class RingKind { rational, laurent, modint };

inline std::string to_string(RingKind k)
{
    switch (k) {
    case RingKind::rational: return "rational";
    case RingKind::laurent: return "laurent";
    case RingKind::modint: return "modint";
    }
    return "?";
}

class config_error : public std::runtime_error {
public:
    config_error(int line, std::string field, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + message),
          line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

struct AlphaConfig {
    RingKind ring = RingKind::rational;
    long period = 0;
    std::vector<std::string> a, b, c;
    long p = 1;
    std::map<std::string, int> lines; ///< field -> line it was defined on
};

namespace detail {

inline std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline long parse_config_long(const std::string& value, int line, const std::string& field)
{
    try {
        std::size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw config_error(line, field, "expected an integer, got '" + value + "'");
    }
}

inline std::vector<std::string> parse_config_array(const std::string& value, int line, const std::string& field)
{
    if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw config_error(line, field, "expected a bracketed list like [1, 2]");
    std::vector<std::string> items;
    const std::string body = value.substr(1, value.size() - 2);
    if (trim(body).empty()) return items;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t = trim(item);
        if (t.empty()) throw config_error(line, field, "empty list element");
        items.push_back(std::move(t));
    }
    return items;
}

template <class R>
void check_elements(const AlphaConfig& cfg, const std::string& field, const std::vector<std::string>& items)
{
    for (const auto& s : items) {
        try {
            (void)parse_element<R>(s);
        } catch (const std::exception& e) {
            throw config_error(cfg.lines.at(field), field,
                               "cannot parse '" + s + "' as " + to_string(cfg.ring) + ": " + e.what());
        }
    }
}

} // namespace detail

inline AlphaConfig parse_config(std::string_view text)
{
    AlphaConfig cfg;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw config_error(line_no, "", "expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (cfg.lines.count(key)) throw config_error(line_no, key, "duplicate field");
        cfg.lines[key] = line_no;
        if (key == "ring") {
            if (value == "rational") cfg.ring = RingKind::rational;
            else if (value == "laurent") cfg.ring = RingKind::laurent;
            else if (value == "modint") cfg.ring = RingKind::modint;
            else throw config_error(line_no, key, "unknown ring '" + value + "'");
        } else if (key == "l") {
            cfg.period = detail::parse_config_long(value, line_no, key);
            if (cfg.period < 1) throw config_error(line_no, key, "period must be >= 1");
        } else if (key == "p") {
            cfg.p = detail::parse_config_long(value, line_no, key);
        } else if (key == "a") {
            cfg.a = detail::parse_config_array(value, line_no, key);
        } else if (key == "b") {
            cfg.b = detail::parse_config_array(value, line_no, key);
        } else if (key == "c") {
            cfg.c = detail::parse_config_array(value, line_no, key);
        } else {
            throw config_error(line_no, key, "unknown field");
        }
    }
    for (const char* required : {"ring", "l", "a", "b", "c"})
        if (!cfg.lines.count(required)) throw config_error(line_no, required, "missing required field");
    for (const auto& [field, items] : {std::pair<std::string, const std::vector<std::string>*>{"a", &cfg.a},
                                       {"b", &cfg.b}, {"c", &cfg.c}}) {
        if (static_cast<long>(items->size()) != cfg.period)
            throw config_error(cfg.lines.at(field), field,
                               "length " + std::to_string(items->size()) + " does not match l = " +
                                   std::to_string(cfg.period));
    }
    for (const auto& [field, items] : {std::pair<std::string, const std::vector<std::string>*>{"a", &cfg.a},
                                       {"b", &cfg.b}, {"c", &cfg.c}}) {
        switch (cfg.ring) {
        case RingKind::rational: detail::check_elements<Rational>(cfg, field, *items); break;
        case RingKind::laurent: detail::check_elements<LaurentPoly>(cfg, field, *items); break;
        case RingKind::modint: detail::check_elements<ModInt<>>(cfg, field, *items); break;
        }
    }
    return cfg;
}

template <class R>
PeriodicAlpha<R> to_alpha(const AlphaConfig& cfg)
{
    auto conv = [](const std::vector<std::string>& items) {
        std::vector<R> out;
        for (const auto& s : items) out.push_back(parse_element<R>(s));
        return out;
    };
    return PeriodicAlpha<R>(conv(cfg.a), conv(cfg.b), conv(cfg.c), cfg.p);
}

} // namespace contfrac
