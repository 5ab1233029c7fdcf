#pragma once

/**
 * @file cli.hpp
 * @brief Subcommand dispatch for the `contfrac` command-line tool.
 *
 * Kept in a header so the test suite can drive it in-process; tools/contfrac_main.cpp
 * only forwards argv.
 */

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"

#include "contfrac/bench.hpp"
#include "contfrac/chebyshev.hpp"
#include "contfrac/config.hpp"
#include "contfrac/continuant.hpp"
#include "contfrac/io.hpp"
#include "contfrac/periodic.hpp"
#include "contfrac/qrational.hpp"
#include "contfrac/quaternion.hpp"

namespace contfrac {

namespace cli_detail {

/// Thrown by a command that detected a failed identity; exit status 1.
struct verification_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline AlphaConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const config_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

/// Calls f(PeriodicAlpha<R>) with R chosen by the config's ring.
template <class F>
void with_alpha(const AlphaConfig& cfg, F&& f)
{
    switch (cfg.ring) {
    case RingKind::rational: f(to_alpha<Rational>(cfg)); break;
    case RingKind::laurent: f(to_alpha<LaurentPoly>(cfg)); break;
    case RingKind::modint: f(to_alpha<ModInt<>>(cfg)); break;
    }
}

inline std::string format_coeffs(const ChebU& u)
{
    std::string s = "[";
    for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
        if (i) s += ", ";
        s += u.coeffs[i].get_str();
    }
    return s + "]";
}

/// One identity family in `verify`.
struct Tally {
    std::string name;
    long checks = 0;
    long skipped = 0;
    std::vector<std::string> failures{};

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

inline bool print_tally(std::ostream& out, const Tally& t)
{
    if (!t.failures.empty()) {
        out << "FAIL " << t.name << " (" << t.failures.size() << " of " << t.checks << " checks)\n";
        for (const auto& f : t.failures) out << "  " << f << '\n';
        return false;
    }
    if (t.checks == 0) {
        out << "SKIP " << t.name << '\n';
        return true;
    }
    out << "PASS " << t.name << " (" << t.checks << " checks";
    if (t.skipped) out << ", " << t.skipped << " skipped";
    out << ")\n";
    return true;
}

/// Field used for the continued-fraction check of a given ring.
template <class R>
using quotient_field_t = std::conditional_t<std::is_same_v<R, LaurentPoly>, LaurentFraction, R>;

template <class R>
bool verify_alpha(const PeriodicAlpha<R>& alpha, long p, long max_n, long max_m, std::ostream& out)
{
    const long l = alpha.period();
    std::vector<Tally> tallies;

    Tally rec{"recurrence = oracle"};
    for (long n = -1; n <= max_n; ++n) {
        const R want = continuant_det_oracle(alpha, p, n);
        const std::string tag = "n=" + std::to_string(n);
        rec.expect(continuant_rec(alpha, p, n) == want, "rec " + tag);
        rec.expect(continuant_rec_forward(alpha, p, n) == want, "forward rec " + tag);
        if (n <= 6) rec.expect(continuant_leibniz(alpha, p, n) == want, "leibniz " + tag);
    }
    tallies.push_back(rec);

    Tally closed{"closed = recurrence"};
    for (long m = 0; m <= max_m; ++m) {
        for (long j = -1; j <= std::max(l - 2, 0L); ++j) {
            const R want = continuant_rec(alpha, p - j, l * m + j);
            const std::string tag = "m=" + std::to_string(m) + " j=" + std::to_string(j);
            closed.expect(closed_form_general(alpha, p, m, j) == want, "closed " + tag);
            closed.expect(closed_form_general(alpha, p, m, j, ScaledUPath::logarithmic) == want, "closed/log " + tag);
            closed.expect(continuant_by_matrix_power(alpha, p, m, j) == want, "matpow " + tag);
        }
    }
    tallies.push_back(closed);

    Tally entries{"transfer-matrix entries"};
    Tally trdet{"trace/det"};
    for (long n = 1; n <= max_n; ++n) {
        const Mat2<R> A = transfer_matrix(alpha, p, n);
        const R w = -(alpha.b(p + n - 1) * alpha.c(p + n - 1));
        const std::string tag = "n=" + std::to_string(n);
        entries.expect(A.a == continuant_rec(alpha, p, n), "top-left " + tag);
        entries.expect(A.b == w * continuant_rec(alpha, p, n - 1), "top-right " + tag);
        entries.expect(A.c == continuant_rec(alpha, p + 1, n - 1), "bottom-left " + tag);
        entries.expect(A.d == w * continuant_rec(alpha, p + 1, n - 2), "bottom-right " + tag);
        R prod(1);
        for (long j = 1; j <= n; ++j) prod = prod * alpha.b(p + j - 1) * alpha.c(p + j - 1);
        trdet.expect(A.trace() == continuant_rec(alpha, p, n) + w * continuant_rec(alpha, p + 1, n - 2), "trace " + tag);
        trdet.expect(A.det() == prod, "det " + tag);
    }
    tallies.push_back(entries);
    tallies.push_back(trdet);

    Tally shift{"shift"};
    for (long n = 0; n <= std::min(max_n, 8L); ++n)
        for (long m = 0; m <= n; ++m)
            shift.expect(shift_check(alpha, p, n, m), "n=" + std::to_string(n) + " m=" + std::to_string(m));
    tallies.push_back(shift);

    Tally cf{"CF quotient"};
    using Q = quotient_field_t<R>;
    const auto qalpha = alpha.template map<Q>([](const R& x) { return Q(x); });
    bool c_all_minus_one = true;
    for (const auto& c : alpha.c_values()) c_all_minus_one = c_all_minus_one && c == R(-1);
    if (c_all_minus_one) {
        for (long n = 1; n <= max_n; ++n) {
            try {
                const Q v = cf_eval(qalpha, p, n);
                cf.expect(v * Q(continuant_rec(alpha, p + 1, n - 1)) == Q(continuant_rec(alpha, p, n)),
                          "n=" + std::to_string(n));
            } catch (const division_by_zero&) {
                ++cf.skipped;
            }
        }
    }
    tallies.push_back(cf);

    bool ok = true;
    for (const auto& t : tallies) ok = print_tally(out, t) && ok;
    return ok;
}

inline std::vector<std::uint64_t> parse_m_list(const std::string& s)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = detail::trim(item);
        if (item.empty()) continue;
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw std::runtime_error("bad --m-list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("--m-list is empty");
    return out;
}

} // namespace cli_detail

/// Runs the tool on `args` (args[0] is the program name).  Returns the exit
/// status: 0 on success, 1 when a verification fails, 2 on usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using namespace cli_detail;

    CLI::App app{"Exact continuants, periodic closed forms and q-rationals"};
    app.require_subcommand(1);

    std::string config_path;
    long n = 0, m = 0, j = 0, p_override = 0, max_n = 10, max_m = 6, l = 3;
    bool have_p = false, verify = false, closed = false;
    std::string strategy, q_text, m_list = "10,1000,100000", format = "both", method = "recurrence";
    std::string r_text, s_text;
    std::uint64_t seed = 1;

    auto* cont = app.add_subcommand("continuant", "K_n(alpha_p) for a coefficient config");
    cont->add_option("--config", config_path, "config file")->required();
    cont->add_option("--n", n, "order n >= -1")->required();
    cont->add_option("--p", p_override, "start index (default: config p)")->each([&](const std::string&) { have_p = true; });
    strategy = "rec";
    cont->add_option("--strategy", strategy, "oracle | rec | transfer")
        ->check(CLI::IsMember({"oracle", "rec", "transfer"}));

    auto* per = app.add_subcommand("periodic", "K_{lm+j}(alpha_{p-j}) for an l-periodic config");
    per->add_option("--config", config_path, "config file")->required();
    per->add_option("--m", m, "number of periods m >= 0")->required();
    per->add_option("--j", j, "offset j in [-1, l-2]");
    std::string per_strategy = "closed";
    per->add_option("--strategy", per_strategy, "closed | rec | oracle | matpow")
        ->check(CLI::IsMember({"closed", "rec", "oracle", "matpow"}));
    per->add_flag("--verify", verify, "also check that all strategies agree");

    auto* qrat = app.add_subcommand("qrat", "q-deformed rational [r/s]_q");
    qrat->add_option("--r", r_text, "numerator r")->required();
    qrat->add_option("--s", s_text, "denominator s")->required();

    auto* qfib = app.add_subcommand("qfib", "q-Fibonacci polynomial F_n(q)");
    qfib->add_option("--n", n, "index n >= 1")->required();
    qfib->add_flag("--closed", closed, "use the Chebyshev closed form");

    auto* quat = app.add_subcommand("quatpow", "power of a rational quaternion");
    quat->add_option("--q", q_text, "components \"a,b,c,d\"")->required();
    quat->add_option("--n", n, "exponent n >= 0")->required();
    std::string quat_strategy = "cheb";
    quat->add_option("--strategy", quat_strategy, "cheb | naive")->check(CLI::IsMember({"cheb", "naive"}));

    auto* cheb = app.add_subcommand("chebyshev", "coefficients of U_n(x), ascending");
    cheb->add_option("--n", n, "index n >= -2")->required();
    cheb->add_option("--method", method, "recurrence | hypergeometric | genfun")
        ->check(CLI::IsMember({"recurrence", "hypergeometric", "genfun"}));

    auto* bench = app.add_subcommand("bench", "compare K_{lm} strategies over ModInt");
    bench->add_option("--l", l, "period l >= 1");
    bench->add_option("--m-list", m_list, "comma-separated m values");
    bench->add_option("--seed", seed, "seed for the random instance");
    bench->add_option("--format", format, "table | csv | both")->check(CLI::IsMember({"table", "csv", "both"}));

    auto* ver = app.add_subcommand("verify", "cross-check every identity on a config");
    ver->add_option("--config", config_path, "config file")->required();
    ver->add_option("--max-n", max_n, "largest continuant order checked");
    ver->add_option("--max-m", max_m, "largest number of periods checked");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (*cont) {
            const AlphaConfig cfg = load_config(config_path);
            const long p = have_p ? p_override : cfg.p;
            with_alpha(cfg, [&](const auto& alpha) {
                using R = std::decay_t<decltype(alpha.a(0))>;
                R value;
                if (strategy == "oracle") value = continuant_det_oracle(alpha, p, n);
                else if (strategy == "rec") value = continuant_rec(alpha, p, n);
                else {
                    if (n < -1) throw precondition_error("continuant: n must be >= -1");
                    value = n == -1 ? R(0) : transfer_matrix(alpha, p, n).a;
                }
                out << to_text(value) << '\n';
            });
        } else if (*per) {
            const AlphaConfig cfg = load_config(config_path);
            bool agree = true;
            with_alpha(cfg, [&](const auto& alpha) {
                const Strategy chosen = per_strategy == "closed" ? Strategy::closed
                                      : per_strategy == "rec"    ? Strategy::rec
                                      : per_strategy == "oracle" ? Strategy::oracle
                                                                 : Strategy::matpow;
                const auto value = periodic_value(alpha, cfg.p, m, j, chosen);
                out << to_text(value) << '\n';
                if (verify) {
                    for (const auto& [name, s] : {std::pair{"closed", Strategy::closed}, {"rec", Strategy::rec},
                                                  {"oracle", Strategy::oracle}, {"matpow", Strategy::matpow}}) {
                        const auto v = periodic_value(alpha, cfg.p, m, j, s);
                        const bool same = v == value;
                        agree = agree && same;
                        out << (same ? "PASS " : "FAIL ") << name << " = " << to_text(v) << '\n';
                    }
                }
            });
            if (!agree) throw verification_failed("strategies disagree");
        } else if (*qrat) {
            const QRational v = q_rational(cf_digits(BigInt(r_text), BigInt(s_text)));
            out << "numerator: " << v.numerator() << '\n' << "denominator: " << v.denominator() << '\n';
        } else if (*qfib) {
            out << (closed ? q_fibonacci_closed(n) : q_fibonacci(n)) << '\n';
        } else if (*quat) {
            std::vector<Rational> parts;
            std::stringstream ss(q_text);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(parse_element<Rational>(item));
            if (parts.size() != 4) throw std::runtime_error("--q needs four comma-separated components");
            if (n < 0) throw precondition_error("quatpow: n must be >= 0");
            const Quaternion x{parts[0], parts[1], parts[2], parts[3]};
            const auto e = static_cast<std::uint64_t>(n);
            out << (quat_strategy == "cheb" ? quat_power_cheb(x, e) : quat_power_naive(x, e)) << '\n';
        } else if (*cheb) {
            const int k = static_cast<int>(n);
            const ChebU u = method == "hypergeometric"  ? u_coeffs_hypergeometric(k)
                          : method == "genfun" && k >= 0 ? u_genfun_coeff(k, k)
                                                         : u_coeffs(k);
            out << format_coeffs(u) << '\n';
        } else if (*bench) {
            if (l < 1) throw precondition_error("bench: l must be >= 1");
            const auto rows = run_bench(random_modint_alpha(l, seed), parse_m_list(m_list));
            if (format != "csv") write_bench_table(out, rows);
            if (format == "both") out << '\n';
            if (format != "table") write_bench_csv(out, rows);
        } else if (*ver) {
            const AlphaConfig cfg = load_config(config_path);
            bool ok = true;
            out << "config: " << config_path << " (ring " << to_string(cfg.ring) << ", l = " << cfg.period
                << ", p = " << cfg.p << ")\n";
            with_alpha(cfg, [&](const auto& alpha) { ok = verify_alpha(alpha, cfg.p, max_n, max_m, out); });
            if (!ok) throw verification_failed("verification failed");
        }
    } catch (const verification_failed& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace contfrac
