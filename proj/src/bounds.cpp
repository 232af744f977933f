#include "cuspbound/bounds.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cuspbound/arith.hpp"
#include "cuspbound/gamma0n.hpp"
#include "cuspbound/jsonout.hpp"
#include "cuspbound/scattering.hpp"
#include "cuspbound/specfun.hpp"

namespace cuspbound {

namespace {

void validate(const BoundInputs& inputs) {
    if (!(inputs.d_x > 0.0)) throw std::invalid_argument("BoundInputs: d_x > 0 required");
    if (!(inputs.lambda1 > 0.0))
        throw std::invalid_argument("BoundInputs: lambda1 > 0 required");
}

}  // namespace

DeltaBound delta_x_bound(const Gamma0Profile& profile, const BoundInputs& inputs) {
    validate(inputs);
    if (profile.genus < 1)
        throw std::invalid_argument("delta_x_bound: requires genus >= 1");
    const double v = profile.volume;
    const double g = static_cast<double>(profile.genus);
    double sum_inv = 0.0, sum_ord = 0.0;
    for (const auto& e : profile.elliptic) {
        sum_inv += 1.0 + 1.0 / e.order;
        sum_ord += e.order + 1.0;
    }
    DeltaBound b;
    b.elliptic_order_term = 4.0 * kPi / (v * g) * sum_inv;
    b.elliptic_log_term = 4.0 * std::log(2.0) / (v * g) * sum_ord;
    b.chyp_term = 4.0 * kPi * (inputs.d_x + 1.0) * (inputs.d_x + 1.0) /
                  (inputs.lambda1 * v);
    b.volume_term = 4.0 * kPi / v;
    b.log_term = 2.0 * std::log(4.0 * kPi) / g;
    b.parabolic_term = 2.0 * static_cast<double>(profile.cusp_count) / (g * v) *
                       (kPi + 4.0 * kPi * kPi / 3.0 + 1.0);
    b.total = b.elliptic_order_term + b.elliptic_log_term + b.chyp_term +
              b.volume_term + b.log_term + b.parabolic_term;
    return b;
}

double c_hyp_bound(const Gamma0Profile& profile, const BoundInputs& inputs) {
    validate(inputs);
    if (profile.genus < 1)
        throw std::invalid_argument("c_hyp_bound: requires genus >= 1");
    const double g = static_cast<double>(profile.genus);
    return 16.0 * kPi * g * g * (inputs.d_x + 1.0) * (inputs.d_x + 1.0) /
           (inputs.lambda1 * profile.volume);
}

double elliptic_integral_bound(const Gamma0Profile& profile) {
    double s = 0.0;
    for (const auto& e : profile.elliptic) s += e.order - 1.0;
    return 4.0 * kPi * std::log(2.0) / profile.volume * s;
}

double parabolic_remainder_bound(const Gamma0Profile& profile) {
    if (profile.genus < 1)
        throw std::invalid_argument("parabolic_remainder_bound: requires genus >= 1");
    return (4.0 * kPi * kPi / 3.0 + 1.0) * static_cast<double>(profile.cusp_count) /
           (static_cast<double>(profile.genus) * profile.volume);
}

BoundLedger green_can_ledger(std::uint64_t n, const BoundInputs& inputs) {
    const Gamma0Profile p = profile(n);
    if (p.genus < 1)
        throw std::invalid_argument("green_can_ledger: requires genus >= 1");
    const double g = static_cast<double>(p.genus);
    BoundLedger led;
    led.n = n;
    led.main_scattering =
        4.0 * kPi * detail::evaluate(detail::constant_terms_0inf(n), n);
    led.cusp_sums = 2.0 * kPi / g * (cusp_sum_a_0(n) + cusp_sum_a_inf(n));
    led.selberg_term = 4.0 * kPi * inputs.c_x / (g * p.volume);
    led.elliptic_klf_term = 2.0 * kPi / g * klf_elliptic_weighted_sum(n);
    led.delta = delta_x_bound(p, inputs);
    const double center = led.main_scattering + led.cusp_sums + led.selberg_term +
                          led.elliptic_klf_term;
    led.total_lower = center - led.delta.total;
    led.total_upper = center + led.delta.total;
    return led;
}

namespace {

SweepRow sweep_row(std::uint64_t n, const BoundInputs& inputs) {
    SweepRow row;
    row.n = n;
    const Gamma0Profile p = profile(n);
    row.genus = p.genus;
    row.volume = p.volume;
    if (p.genus <= 1) {
        row.skipped = true;
        return row;
    }
    const double g = static_cast<double>(p.genus);
    const double c0inf = detail::evaluate(detail::constant_terms_0inf(n), n);
    row.main = 8.0 * kPi * g * (1.0 - g) * c0inf;
    row.cusp_corr = 4.0 * kPi * (1.0 - g) * (cusp_sum_a_inf(n) + cusp_sum_a_0(n));
    row.elliptic_corr = 4.0 * kPi * (1.0 - g) * klf_elliptic_weighted_sum(n);
    row.delta_bound = delta_x_bound(p, inputs).total;
    const double selberg = 8.0 * kPi * (1.0 - g) * inputs.c_x / p.volume;
    row.total = row.main + row.cusp_corr + row.elliptic_corr + selberg;
    row.ratio = row.total / (2.0 * g * std::log(static_cast<double>(n)));
    row.abs_err = std::abs(row.ratio - 1.0);
    return row;
}

}  // namespace

std::vector<SweepRow> asymptotic_sweep(const std::vector<std::uint64_t>& n_values,
                                     const BoundInputs& inputs, bool primes_only,
                                     int threads) {
    validate(inputs);
    std::vector<std::uint64_t> levels;
    for (std::uint64_t n : n_values) {
        if (n == 0) throw std::invalid_argument("asymptotic_sweep: levels must be positive");
        if (!primes_only || is_prime(n)) levels.push_back(n);
    }
    std::vector<SweepRow> rows(levels.size());
    if (threads < 1) threads = 1;
    const std::size_t cap = levels.empty() ? 1 : levels.size();
    if (static_cast<std::size_t>(threads) > cap) threads = static_cast<int>(cap);
    if (threads == 1) {
        for (std::size_t i = 0; i < levels.size(); ++i)
            rows[i] = sweep_row(levels[i], inputs);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= levels.size()) return;
            try {
                rows[i] = sweep_row(levels[i], inputs);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string ledger_to_json(const BoundLedger& led) {
    std::string out = "{";
    out += "\"n\": " + std::to_string(led.n);
    out += ", \"main_scattering\": " + fmt_sig(led.main_scattering, 12);
    out += ", \"cusp_sums\": " + fmt_sig(led.cusp_sums, 12);
    out += ", \"selberg_term\": " + fmt_sig(led.selberg_term, 12);
    out += ", \"elliptic_klf_term\": " + fmt_sig(led.elliptic_klf_term, 12);
    out += ", \"delta_x_bound\": {";
    out += "\"elliptic_order_term\": " + fmt_sig(led.delta.elliptic_order_term, 12);
    out += ", \"elliptic_log_term\": " + fmt_sig(led.delta.elliptic_log_term, 12);
    out += ", \"chyp_term\": " + fmt_sig(led.delta.chyp_term, 12);
    out += ", \"volume_term\": " + fmt_sig(led.delta.volume_term, 12);
    out += ", \"log_term\": " + fmt_sig(led.delta.log_term, 12);
    out += ", \"parabolic_term\": " + fmt_sig(led.delta.parabolic_term, 12);
    out += ", \"total\": " + fmt_sig(led.delta.total, 12);
    out += "}";
    out += ", \"total_lower\": " + fmt_sig(led.total_lower, 12);
    out += ", \"total_upper\": " + fmt_sig(led.total_upper, 12);
    out += "}";
    return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, std::string* notices) {
    std::string out =
        "n,genus,volume,main,cusp_corr,elliptic_corr,delta_bound,total,ratio,abs_err\n";
    for (const auto& r : rows) {
        if (r.skipped) {
            if (notices)
                *notices += "notice: n=" + std::to_string(r.n) +
                            " skipped (genus " + std::to_string(r.genus) + " <= 1)\n";
            continue;
        }
        out += std::to_string(r.n) + "," + std::to_string(r.genus) + "," +
               fmt_sig(r.volume, 12) + "," + fmt_sig(r.main, 12) + "," +
               fmt_sig(r.cusp_corr, 12) + "," + fmt_sig(r.elliptic_corr, 12) + "," +
               fmt_sig(r.delta_bound, 12) + "," + fmt_sig(r.total, 12) + "," +
               fmt_sig(r.ratio, 12) + "," + fmt_sig(r.abs_err, 12) + "\n";
    }
    return out;
}

}  // namespace cuspbound
