#include "cuspbound/checks.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "cuspbound/arith.hpp"
#include "cuspbound/bounds.hpp"
#include "cuspbound/eisenstein.hpp"
#include "cuspbound/gamma0.hpp"
#include "cuspbound/gamma0n.hpp"
#include "cuspbound/hyperbolic.hpp"
#include "cuspbound/jsonout.hpp"
#include "cuspbound/quadrature.hpp"
#include "cuspbound/scattering.hpp"
#include "cuspbound/specfun.hpp"

namespace cuspbound {

namespace {

// ---- independent oracles ---------------------------------------------------

// zeta(k) for integer k >= 2 by direct summation with an integral-plus-
// midpoint tail correction.
double zeta_oracle(int k) {
    const int cut = 4000;
    double s = 0.0;
    for (int n = cut; n >= 1; --n) s += std::pow(n, -k);
    const double m = cut + 0.5;
    s += std::pow(m, 1.0 - k) / (k - 1.0);  // int_{cut+1/2}^inf x^-k dx
    return s;
}

// beta(2) = sum (-1)^k (2k+1)^-2 with the alternating-tail midpoint trick.
double beta2_oracle() {
    const int cut = 20000;
    double s = 0.0;
    int sign = (cut % 2 == 0) ? 1 : -1;
    for (int k = cut - 1; k >= 0; --k) {
        sign = -sign;
        s += sign / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    }
    s += ((cut % 2 == 0) ? 0.5 : -0.5) / ((2.0 * cut + 1.0) * (2.0 * cut + 1.0));
    return s;
}

struct Tracker {
    double worst = 0.0;
    void feed(double dev) { if (dev > worst) worst = dev; }
};

std::string fmt_worst(const Tracker& t) { return "worst dev " + fmt_sig(t.worst, 3); }

// ---- criterion 1: lattice vs Fourier, and the closed-form oracle ----------

CheckResult check_eisenstein_dual(bool fast, const VerifyOptions& opts) {
    CheckResult r{"eisenstein dual evaluation", true, ""};
    struct P { double x, y, s; };
    const std::vector<P> grid = {
        {0.0, 1.0, 2.0},  {0.3, 0.8, 2.0},   {-0.2, 1.3, 2.5}, {0.1, 0.6, 2.5},
        {0.4, 1.1, 3.0},  {0.25, 0.9, 3.0},  {-0.45, 1.7, 3.0}, {0.05, 0.75, 4.0},
        {0.5, 2.0, 4.0},  {-0.3, 1.2, 2.25}};
    Tracker t;
    const std::size_t npts = fast ? 4 : grid.size();
    for (std::size_t i = 0; i < npts; ++i) {
        const HalfPlanePoint z(grid[i].x, grid[i].y);
        const auto q = opts.lattice_cutoff ? opts.lattice_cutoff
                                           : lattice_cutoff_for_tol(z, grid[i].s, 1e-6);
        const double lat = eisenstein_lattice(z, grid[i].s, q);
        FourierTruncation trunc;
        trunc.q_tol = opts.q_tol;
        const double fou = eisenstein_fourier(z, grid[i].s, trunc);
        t.feed(std::abs(lat - fou));
    }
    if (t.worst > 1e-6) r.pass = false;
    // E(i,2) against 2 zeta(2) beta(2) / zeta(4).
    const double oracle = 2.0 * zeta_oracle(2) * beta2_oracle() / zeta_oracle(4);
    const HalfPlanePoint zi(0.0, 1.0);
    const double ei2 = eisenstein_lattice(zi, 2.0, lattice_cutoff_for_tol(zi, 2.0, 2e-6));
    const double dev2 = std::abs(ei2 - oracle);
    if (dev2 > 1e-5) r.pass = false;
    r.detail = fmt_worst(t) + "; |E(i,2) - oracle| = " + fmt_sig(dev2, 3);
    return r;
}

// ---- criterion 2: heat-kernel/Green identity --------------------------------

CheckResult check_heat_green(bool fast, const VerifyOptions& opts) {
    CheckResult r{"heat kernel integrates to the free Green's function", true, ""};
    struct P { double x1, y1, x2, y2; };
    const std::vector<P> pairs = {{0.0, 1.0, 0.0, 2.0},
                                  {0.0, 1.0, 1.0, 2.0},
                                  {1.0, 1.0, 2.0, 1.0},
                                  {0.5, 0.8, -0.3, 1.1},
                                  {0.0, 2.0, 0.1, 0.4}};
    Tracker t;
    const std::size_t nps = fast ? 3 : pairs.size();
    for (std::size_t i = 0; i < nps; ++i) {
        const HalfPlanePoint z(pairs[i].x1, pairs[i].y1), w(pairs[i].x2, pairs[i].y2);
        t.feed(std::abs(green_from_heat(z, w, opts.quad_tol) - green_h(z, w)));
    }
    r.pass = t.worst <= 1e-4;
    r.detail = fmt_worst(t);
    return r;
}

// ---- criterion 3: scattering constants vs epsilon limits --------------------

CheckResult check_scattering_limits(bool fast, const VerifyOptions& opts) {
    CheckResult r{"scattering constants match epsilon limits", true, ""};
    const std::vector<std::uint64_t> levels =
        fast ? std::vector<std::uint64_t>{2, 4, 6, 12}
             : std::vector<std::uint64_t>{2, 4, 6, 12, 36, 360};
    Tracker dev, res;
    for (std::uint64_t n : levels) {
        const double v = volume(n);
        auto limit_of = [&](const std::function<double(double)>& phi) {
            return richardson_limit(
                [&](double eps) { return phi(1.0 + eps) - 1.0 / (eps * v); },
                opts.richardson_kmin, opts.richardson_kmax);
        };
        const ScatteringReport r0 = scattering_const_0inf(n);
        dev.feed(std::abs(r0.constant -
                          limit_of([n](double s) { return scattering_fn_0inf(s, n); })));
        res.feed(std::abs(r0.residue_check - 1.0));
        for (const Cusp& a : cusp_set(n)) {
            const ScatteringReport ri = scattering_const_a_inf(a, n);
            const ScatteringReport rz = scattering_const_a_0(a, n);
            const std::uint64_t den = a.n;
            dev.feed(std::abs(ri.constant - limit_of([den, n](double s) {
                return scattering_fn_a_inf(s, den, n);
            })));
            dev.feed(std::abs(rz.constant - limit_of([den, n](double s) {
                return scattering_fn_a_0(s, den, n);
            })));
            res.feed(std::abs(ri.residue_check - 1.0));
            res.feed(std::abs(rz.residue_check - 1.0));
        }
    }
    r.pass = dev.worst <= 1e-6 && res.worst <= 1e-4;
    r.detail = fmt_worst(dev) + "; worst residue dev " + fmt_sig(res.worst, 3);
    return r;
}

// ---- criterion 4: specialization identities ---------------------------------

CheckResult check_specialization(bool fast) {
    CheckResult r{"specialization identities a=0 and a=inf", true, ""};
    Tracker t;
    const std::uint64_t nmax = fast ? 200 : 500;
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const double c0 = detail::evaluate(detail::constant_terms_0inf(n), n);
        const double ca = detail::evaluate(detail::constant_terms_a_inf(1, n), n);
        const double cz = detail::evaluate(detail::constant_terms_a_0(n, n), n);
        t.feed(std::abs(ca - c0));
        t.feed(std::abs(cz - c0));
    }
    r.pass = t.worst <= 1e-12;
    r.detail = fmt_worst(t);
    return r;
}

// ---- criterion 5: structure enumeration -------------------------------------

CheckResult check_structure(bool fast) {
    CheckResult r{"closed-form counts equal enumeration; genus integral", true, ""};
    const std::uint64_t nmax = fast ? 2000 : 10000;
    for (std::uint64_t n = 1; n <= nmax && r.pass; ++n) {
        const auto pts = elliptic_points(n);
        std::uint64_t seen2 = 0, seen3 = 0;
        for (const auto& e : pts) (e.order == 2 ? seen2 : seen3)++;
        const auto [nu2, nu3] = elliptic_counts(n);
        if (seen2 != nu2 || seen3 != nu3) {
            r.pass = false;
            r.detail = "count mismatch at n=" + std::to_string(n);
        }
        try {
            (void)genus(n);
        } catch (const std::exception&) {
            r.pass = false;
            r.detail = "genus failure at n=" + std::to_string(n);
        }
    }
    if (r.pass) {
        if (genus(11) != 1 || genus(37) != 2 || cusp_count(12) != 6) {
            r.pass = false;
            r.detail = "spot value mismatch";
        } else {
            r.detail = "all n <= " + std::to_string(nmax) +
                       "; genus(11)=1 genus(37)=2 cusp_count(12)=6";
        }
    }
    return r;
}

// ---- criterion 6: Kronecker limit constant ----------------------------------

CheckResult check_klf_constant(const VerifyOptions& opts) {
    CheckResult r{"Kronecker limit constant resolved by the epsilon limit", true, ""};
    // Gap between the adopted constant and the discarded alternative
    // (3/pi)(gamma - log 4 pi); frozen at 30-digit precision.
    const double kGap = 2.7328821898693689;
    const double alt_shift =
        scattering_constant_level1() - 3.0 / kPi * (kEulerGamma - std::log(4.0 * kPi));
    struct P { double x, y; };
    const std::vector<P> pts = {{0.0, 1.0}, {0.3, 1.2}, {-0.25, 0.8}};
    Tracker dev, gap;
    for (const auto& pt : pts) {
        const HalfPlanePoint z(pt.x, pt.y);
        const double lim = richardson_limit(
            [&](double eps) {
                return eisenstein_fourier(z, 1.0 + eps) - 3.0 / (kPi * eps);
            },
            opts.richardson_kmin, opts.richardson_kmax);
        const double kc = klf_infty_level1(z);
        dev.feed(std::abs(lim - kc));
        const double alt = kc - alt_shift;  // closed form with the alternative constant
        gap.feed(std::abs(std::abs(lim - alt) - kGap));
    }
    r.pass = dev.worst <= 1e-5 && gap.worst <= 1e-4;
    r.detail = fmt_worst(dev) + "; alternative constant misses by " +
               fmt_sig(alt_shift, 6);
    return r;
}

// ---- criterion 7: level lowering --------------------------------------------

CheckResult check_level_lowering(bool fast) {
    CheckResult r{"level-lowering relation and pair-sum identity", true, ""};
    struct P { double x, y; };
    const std::vector<P> pts = {{0.0, 1.0}, {0.21, 0.93}, {-0.37, 1.18}};
    Tracker t;
    const std::size_t npts = fast ? 1 : pts.size();
    for (std::uint64_t n : {2ull, 3ull, 5ull, 6ull}) {
        for (std::size_t i = 0; i < npts; ++i) {
            const HalfPlanePoint z(pts[i].x, pts[i].y);
            const auto q = static_cast<std::uint64_t>(
                std::sqrt(3.93 / z.y / (2.5e-7 * n)) + 8);
            const double coset = eisenstein_gamma0_lattice(z, 2.0, n, q);
            const double rel = eisenstein_infty_gamma0(z, 2.0, n);
            t.feed(std::abs(coset - rel));
        }
    }
    if (t.worst > 1e-6) r.pass = false;
    // Two-sided Kronecker-limit identity; klf_pair_sum throws beyond 1e-7.
    const std::vector<P> kpts = {{0.3, 0.7}, {-0.2, 1.1}, {0.05, 0.45},
                                 {0.5, 1.5}, {0.4, 0.2}};
    try {
        for (std::uint64_t n : {1ull, 5ull, 12ull})
            for (const auto& pt : kpts)
                (void)klf_pair_sum(HalfPlanePoint(pt.x, pt.y), n);
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = std::string("pair-sum identity failed: ") + ex.what();
        return r;
    }
    r.detail = "coset-vs-relation " + fmt_worst(t) + "; pair-sum identity held at 1e-7";
    return r;
}

// ---- criterion 8: asymptotic sweep proxies ----------------------------------

CheckResult check_sweep_proxies(bool fast, int threads) {
    CheckResult r{"asymptotic ratio proxies over prime levels", true, ""};
    const BoundInputs inputs;
    const std::vector<std::uint64_t> decades = {101, 1009, 10007};
    const auto head = asymptotic_sweep(decades, inputs, true, threads);
    bool decreasing = head.size() == 3 && head[0].abs_err > head[1].abs_err &&
                      head[1].abs_err > head[2].abs_err;
    std::vector<std::uint64_t> range;
    const std::uint64_t hi = fast ? 11000 : 20000;
    for (std::uint64_t n = 10001; n <= hi; n += 2)
        if (is_prime(n)) range.push_back(n);
    const auto rows = asymptotic_sweep(range, inputs, true, threads);
    Tracker ratio_dev, delta_ratio;
    for (const auto& row : rows) {
        if (row.skipped) continue;
        ratio_dev.feed(row.abs_err);
        delta_ratio.feed(row.delta_bound /
                         (static_cast<double>(row.genus) * std::log(static_cast<double>(row.n))));
    }
    r.pass = decreasing && ratio_dev.worst <= 0.25 && delta_ratio.worst <= 0.05;
    r.detail = std::string("decade errs ") + fmt_sig(head[0].abs_err, 3) + " > " +
               fmt_sig(head[1].abs_err, 3) + " > " + fmt_sig(head[2].abs_err, 3) +
               "; worst |ratio-1| " + fmt_sig(ratio_dev.worst, 3) +
               "; worst delta/(g log N) " + fmt_sig(delta_ratio.worst, 3);
    return r;
}

// ---- criterion 9: determinism ------------------------------------------------

CheckResult check_determinism(bool fast, int /*threads*/) {
    CheckResult r{"deterministic output across repeats and thread counts", true, ""};
    const BoundInputs inputs;
    std::vector<std::uint64_t> range;
    const std::uint64_t hi = fast ? 10200 : 10600;
    for (std::uint64_t n = 10001; n <= hi; ++n) range.push_back(n);
    std::string first;
    for (int threads : {1, 2, 5}) {
        std::string notices;
        const std::string csv =
            sweep_to_csv(asymptotic_sweep(range, inputs, true, threads), &notices);
        if (first.empty()) first = csv;
        if (csv != first) {
            r.pass = false;
            r.detail = "sweep differs at " + std::to_string(threads) + " threads";
            return r;
        }
    }
    // Repeated verification subset must render byte-identically.
    auto render = [] {
        std::string s = profile_to_json(profile(360));
        s += scattering_report_to_json(scattering_const_0inf(12));
        s += ledger_to_json(green_can_ledger(11, BoundInputs{}));
        return s;
    };
    if (render() != render()) {
        r.pass = false;
        r.detail = "repeated rendering differs";
        return r;
    }
    r.detail = "sweep identical at 1/2/5 threads; repeated renders identical";
    return r;
}

}  // namespace

std::vector<CheckResult> run_verification(bool fast, int threads,
                                          const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(check_eisenstein_dual(fast, opts));
    out.push_back(check_heat_green(fast, opts));
    out.push_back(check_scattering_limits(fast, opts));
    out.push_back(check_specialization(fast));
    out.push_back(check_structure(fast));
    out.push_back(check_klf_constant(opts));
    out.push_back(check_level_lowering(fast));
    out.push_back(check_sweep_proxies(fast, threads));
    out.push_back(check_determinism(fast, threads));
    return out;
}

std::string format_verification(const std::vector<CheckResult>& results) {
    std::string out;
    int idx = 0;
    for (const auto& r : results) {
        ++idx;
        out += (r.pass ? "[PASS] " : "[FAIL] ");
        out += std::to_string(idx) + ". " + r.name + " -- " + r.detail + "\n";
    }
    return out;
}

}  // namespace cuspbound
