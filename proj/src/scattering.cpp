#include "cuspbound/scattering.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cuspbound/arith.hpp"
#include "cuspbound/eisenstein.hpp"
#include "cuspbound/jsonout.hpp"
#include "cuspbound/quadrature.hpp"
#include "cuspbound/specfun.hpp"

namespace cuspbound {

namespace detail {

namespace {

using CoeffMap = std::map<std::uint64_t, Rational>;

void add_log_integer(CoeffMap& m, std::uint64_t value, const Rational& coeff) {
    // log(value) = sum e_p log p
    for (const auto& [p, e] : factorize(value))
        m[p] += coeff * Rational(static_cast<std::int64_t>(e));
}

LogCombination pack(CoeffMap&& m) {
    LogCombination lc;
    lc.c_const = Rational(1);
    for (auto& [p, c] : m)
        if (c != Rational(0)) lc.c_log.emplace_back(p, c);
    return lc;
}

}  // namespace

LogCombination constant_terms_0inf(std::uint64_t n) {
    CoeffMap m;
    add_log_integer(m, n, Rational(-1));
    for (const auto& [p, e] : factorize(n)) {
        const auto ip = static_cast<std::int64_t>(p);
        m[p] += Rational(2 * ip, ip * ip - 1);
    }
    return pack(std::move(m));
}

LogCombination constant_terms_a_inf(std::uint64_t cusp_den, std::uint64_t n) {
    const std::uint64_t g = std::gcd(cusp_den, n / cusp_den);
    CoeffMap m;
    add_log_integer(m, g, Rational(1));
    add_log_integer(m, cusp_den, Rational(-1));
    add_log_integer(m, n, Rational(-1));
    for (const auto& [p, e] : factorize(n)) {
        const auto ip = static_cast<std::int64_t>(p);
        m[p] += Rational(-2, ip * ip - 1);
    }
    for (const auto& [p, e] : factorize(n / cusp_den)) {
        const auto ip = static_cast<std::int64_t>(p);
        m[p] += Rational(2, ip - 1);
    }
    return pack(std::move(m));
}

LogCombination constant_terms_a_0(std::uint64_t cusp_den, std::uint64_t n) {
    CoeffMap m;
    add_log_integer(m, std::gcd(cusp_den * cusp_den, n), Rational(1));
    add_log_integer(m, n, Rational(-2));
    for (const auto& [p, e] : factorize(n)) {
        const auto ip = static_cast<std::int64_t>(p);
        m[p] += Rational(-2, ip * ip - 1);
    }
    for (const auto& [p, e] : factorize(cusp_den)) {
        const auto ip = static_cast<std::int64_t>(p);
        m[p] += Rational(2, ip - 1);
    }
    return pack(std::move(m));
}

double evaluate(const LogCombination& lc, std::uint64_t n) {
    double acc = lc.c_const.to_double() * kPi * scattering_constant_level1() / 3.0;
    for (const auto& [p, c] : lc.c_log)
        acc += c.to_double() * std::log(static_cast<double>(p));
    return acc / volume(n);
}

}  // namespace detail

double scattering_fn_0inf(double s, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("scattering_fn_0inf: n must be positive");
    if (s == 1.0) throw std::invalid_argument("scattering_fn_0inf: pole at s = 1");
    double prod = 1.0;
    for (const auto& [p, e] : factorize(n)) {
        const double p2s = std::pow(static_cast<double>(p), 2.0 * s);
        prod *= (p2s - static_cast<double>(p)) / (p2s - 1.0);
    }
    return scattering_phi_level1(s) * std::pow(static_cast<double>(n), -s) * prod;
}

double scattering_fn_a_inf(double s, std::uint64_t cusp_den, std::uint64_t n) {
    if (n == 0 || cusp_den == 0 || n % cusp_den != 0)
        throw std::invalid_argument("scattering_fn_a_inf: cusp_den must divide n");
    if (s == 1.0) throw std::invalid_argument("scattering_fn_a_inf: pole at s = 1");
    const std::uint64_t g = std::gcd(cusp_den, n / cusp_den);
    const double pref = static_cast<double>(euler_phi(cusp_den)) /
                        static_cast<double>(euler_phi(g));
    double prod = 1.0;
    for (const auto& [p, e] : factorize(n)) {
        const double p2s = std::pow(static_cast<double>(p), 2.0 * s);
        prod *= p2s / (p2s - 1.0);
    }
    for (const auto& [p, e] : factorize(n / cusp_den))
        prod *= 1.0 - std::pow(static_cast<double>(p), 1.0 - 2.0 * s);
    const double base = static_cast<double>(g) /
                        (static_cast<double>(cusp_den) * static_cast<double>(n));
    return pref * scattering_phi_level1(s) * std::pow(base, s) * prod;
}

double scattering_fn_a_0(double s, std::uint64_t cusp_den, std::uint64_t n) {
    if (n == 0 || cusp_den == 0 || n % cusp_den != 0)
        throw std::invalid_argument("scattering_fn_a_0: cusp_den must divide n");
    if (s == 1.0) throw std::invalid_argument("scattering_fn_a_0: pole at s = 1");
    const std::uint64_t g = std::gcd(cusp_den, n / cusp_den);
    const double pref = static_cast<double>(euler_phi(n / cusp_den)) /
                        static_cast<double>(euler_phi(g));
    double prod = 1.0;
    for (const auto& [p, e] : factorize(n)) {
        const double p2s = std::pow(static_cast<double>(p), 2.0 * s);
        prod *= p2s / (p2s - 1.0);
    }
    for (const auto& [p, e] : factorize(cusp_den))
        prod *= 1.0 - std::pow(static_cast<double>(p), 1.0 - 2.0 * s);
    const double base = static_cast<double>(std::gcd(cusp_den * cusp_den, n)) /
                        (static_cast<double>(n) * static_cast<double>(n));
    return pref * scattering_phi_level1(s) * std::pow(base, s) * prod;
}

namespace {

double residue_check_of(const std::function<double(double)>& phi, std::uint64_t n) {
    auto F = [&](double eps) { return eps * phi(1.0 + eps); };
    return volume(n) * richardson_limit(F, 8, 16);
}

Cusp zero_cusp() { return Cusp{0, 1}; }

Cusp infty_cusp(std::uint64_t n) {
    for (const Cusp& c : cusp_set(n))
        if (c.n == n) return c;
    throw std::logic_error("infty_cusp: class with n = N missing");
}

std::vector<std::pair<std::string, double>> named_terms_0inf(std::uint64_t n) {
    double prime_sum = 0.0;
    for (const auto& [p, e] : factorize(n)) {
        const double pd = static_cast<double>(p);
        prime_sum += 2.0 * pd * std::log(pd) / (pd * pd - 1.0);
    }
    return {{"pi_c_over_3", kPi * scattering_constant_level1() / 3.0},
            {"log_term", -std::log(static_cast<double>(n))},
            {"prime_sum", prime_sum}};
}

}  // namespace

ScatteringReport scattering_const_0inf(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("scattering_const_0inf: n positive");
    ScatteringReport r;
    r.n = n;
    r.pair = {zero_cusp(), infty_cusp(n)};
    r.constant = detail::evaluate(detail::constant_terms_0inf(n), n);
    r.closed_form_terms = named_terms_0inf(n);
    r.residue_check = residue_check_of(
        [n](double s) { return scattering_fn_0inf(s, n); }, n);
    return r;
}

ScatteringReport scattering_const_a_inf(const Cusp& a, std::uint64_t n) {
    if (n == 0 || a.n == 0 || n % a.n != 0 || std::gcd(a.m, a.n) != 1)
        throw std::invalid_argument("scattering_const_a_inf: not a cusp of this level");
    ScatteringReport r;
    r.n = n;
    r.pair = {a, infty_cusp(n)};
    r.constant = detail::evaluate(detail::constant_terms_a_inf(a.n, n), n);
    const std::uint64_t g = std::gcd(a.n, n / a.n);
    double prime_sum_level = 0.0, prime_sum_cof = 0.0;
    for (const auto& [p, e] : factorize(n)) {
        const double pd = static_cast<double>(p);
        prime_sum_level -= 2.0 * std::log(pd) / (pd * pd - 1.0);
    }
    for (const auto& [p, e] : factorize(n / a.n)) {
        const double pd = static_cast<double>(p);
        prime_sum_cof += 2.0 * std::log(pd) / (pd - 1.0);
    }
    r.closed_form_terms = {
        {"pi_c_over_3", kPi * scattering_constant_level1() / 3.0},
        {"log_term", std::log(static_cast<double>(g) /
                              (static_cast<double>(a.n) * static_cast<double>(n)))},
        {"prime_sum_level", prime_sum_level},
        {"prime_sum_cofactor", prime_sum_cof}};
    const std::uint64_t den = a.n;
    r.residue_check = residue_check_of(
        [den, n](double s) { return scattering_fn_a_inf(s, den, n); }, n);
    return r;
}

ScatteringReport scattering_const_a_0(const Cusp& a, std::uint64_t n) {
    if (n == 0 || a.n == 0 || n % a.n != 0 || std::gcd(a.m, a.n) != 1)
        throw std::invalid_argument("scattering_const_a_0: not a cusp of this level");
    ScatteringReport r;
    r.n = n;
    r.pair = {a, zero_cusp()};
    r.constant = detail::evaluate(detail::constant_terms_a_0(a.n, n), n);
    double prime_sum_level = 0.0, prime_sum_num = 0.0;
    for (const auto& [p, e] : factorize(n)) {
        const double pd = static_cast<double>(p);
        prime_sum_level -= 2.0 * std::log(pd) / (pd * pd - 1.0);
    }
    for (const auto& [p, e] : factorize(a.n)) {
        const double pd = static_cast<double>(p);
        prime_sum_num += 2.0 * std::log(pd) / (pd - 1.0);
    }
    r.closed_form_terms = {
        {"pi_c_over_3", kPi * scattering_constant_level1() / 3.0},
        {"log_term", std::log(static_cast<double>(std::gcd(a.n * a.n, n))) -
                         2.0 * std::log(static_cast<double>(n))},
        {"prime_sum_level", prime_sum_level},
        {"prime_sum_numerator", prime_sum_num}};
    const std::uint64_t den = a.n;
    r.residue_check = residue_check_of(
        [den, n](double s) { return scattering_fn_a_0(s, den, n); }, n);
    return r;
}

double cusp_sum_a_inf(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cusp_sum_a_inf: n positive");
    double total = 0.0;
    for (std::uint64_t den : divisors(n)) {
        if (den == n) continue;  // the cusp infinity itself
        const std::uint64_t mult = euler_phi(std::gcd(den, n / den));
        total += static_cast<double>(mult) *
                 detail::evaluate(detail::constant_terms_a_inf(den, n), n);
    }
    return total;
}

double cusp_sum_a_0(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cusp_sum_a_0: n positive");
    double total = 0.0;
    for (std::uint64_t den : divisors(n)) {
        if (den == 1) continue;  // the cusp 0 itself
        const std::uint64_t mult = euler_phi(std::gcd(den, n / den));
        total += static_cast<double>(mult) *
                 detail::evaluate(detail::constant_terms_a_0(den, n), n);
    }
    return total;
}

std::string scattering_report_to_json(const ScatteringReport& r) {
    auto cusp_str = [](const Cusp& c) {
        return std::to_string(c.m) + "/" + std::to_string(c.n);
    };
    std::string out = "{";
    out += "\"pair\": [\"" + cusp_str(r.pair.first) + "\", \"" +
           cusp_str(r.pair.second) + "\"]";
    out += ", \"n\": " + std::to_string(r.n);
    out += ", \"constant\": " + fmt_sig(r.constant, 12);
    out += ", \"terms\": {";
    for (std::size_t i = 0; i < r.closed_form_terms.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + r.closed_form_terms[i].first +
               "\": " + fmt_sig(r.closed_form_terms[i].second, 12);
    }
    out += "}, \"residue_check\": " + fmt_sig(r.residue_check, 12) + "}";
    return out;
}

}  // namespace cuspbound
