// cuspbound -- analytic invariants of the modular curves X_0(N): group
// profiles, Eisenstein series, Kronecker limit functions, scattering
// constants, and canonical-Green's-function bound ledgers and sweeps.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cuspbound/arith.hpp"
#include "cuspbound/bounds.hpp"
#include "cuspbound/checks.hpp"
#include "cuspbound/eisenstein.hpp"
#include "cuspbound/gamma0.hpp"
#include "cuspbound/gamma0n.hpp"
#include "cuspbound/jsonout.hpp"
#include "cuspbound/scattering.hpp"

namespace cb = cuspbound;

namespace {

struct Config {
    std::uint64_t lattice_cutoff = 0;  // 0 = adaptive
    double q_tol = 1e-16;
    double quad_tol = 1e-8;
    int richardson_kmin = 8;
    int richardson_kmax = 16;
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "lattice_cutoff") cfg.lattice_cutoff = std::stoull(val);
        else if (key == "q_tol") cfg.q_tol = std::stod(val);
        else if (key == "quad_tol") cfg.quad_tol = std::stod(val);
        else if (key == "richardson_kmin") cfg.richardson_kmin = std::stoi(val);
        else if (key == "richardson_kmax") cfg.richardson_kmax = std::stoi(val);
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return cfg;
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CUSPBOUND_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(hw);
}

cb::HalfPlanePoint parse_point(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--z", "expected X,Y");
    double x = 0.0, y = 0.0;
    try {
        x = std::stod(spec.substr(0, comma));
        y = std::stod(spec.substr(comma + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--z", "expected numeric X,Y");
    }
    return cb::HalfPlanePoint(x, y);  // y <= 0 is a domain error, not usage
}

void print_profile_table(const cb::Gamma0Profile& p) {
    std::printf("level          %llu\n", static_cast<unsigned long long>(p.n));
    std::printf("volume         %s  (pi * %s)\n", cb::fmt_sig(p.volume, 6).c_str(),
                p.volume_over_pi.to_string().c_str());
    std::printf("genus          %llu\n", static_cast<unsigned long long>(p.genus));
    std::printf("cusps          %llu:", static_cast<unsigned long long>(p.cusp_count));
    for (const auto& c : p.cusps)
        std::printf(" %llu/%llu", static_cast<unsigned long long>(c.m),
                    static_cast<unsigned long long>(c.n));
    std::printf("\n");
    std::printf("elliptic       nu2=%llu nu3=%llu\n",
                static_cast<unsigned long long>(p.nu2),
                static_cast<unsigned long long>(p.nu3));
    for (const auto& e : p.elliptic)
        std::printf("  order %d at (%s, %s)  [n=%llu]\n", e.order,
                    cb::fmt_sig(e.x, 6).c_str(), cb::fmt_sig(e.y, 6).c_str(),
                    static_cast<unsigned long long>(e.n_index));
}

void print_report_table(const cb::ScatteringReport& r) {
    std::printf("C_{%llu/%llu, %llu/%llu}(%llu) = %s   residue_check = %s\n",
                static_cast<unsigned long long>(r.pair.first.m),
                static_cast<unsigned long long>(r.pair.first.n),
                static_cast<unsigned long long>(r.pair.second.m),
                static_cast<unsigned long long>(r.pair.second.n),
                static_cast<unsigned long long>(r.n),
                cb::fmt_sig(r.constant, 6).c_str(),
                cb::fmt_sig(r.residue_check, 6).c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic invariants of the modular curves X0(N)"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "key = value file: lattice_cutoff, "
                   "q_tol, quad_tol, richardson_kmin, richardson_kmax");

    // profile
    auto* sc_profile = app.add_subcommand("profile", "structural profile of Gamma0(N)");
    std::uint64_t prof_n = 1;
    bool prof_json = false;
    sc_profile->add_option("N", prof_n, "level")->required();
    sc_profile->add_flag("--json", prof_json, "emit JSON");

    // eisenstein
    auto* sc_eis = app.add_subcommand("eisenstein", "evaluate E(z, s)");
    std::string eis_z;
    double eis_s = 2.0;
    std::uint64_t eis_level = 1;
    bool eis_level1 = false;
    std::string eis_method;
    sc_eis->add_option("--z", eis_z, "point X,Y")->required();
    sc_eis->add_option("--s", eis_s, "spectral parameter")->required();
    auto* lvl_opt = sc_eis->add_option("--level", eis_level, "level N (default 1)");
    sc_eis->add_flag("--level1", eis_level1, "full modular group")->excludes(lvl_opt);
    sc_eis->add_option("--method", eis_method,
                       "lattice | fourier | relation (defaults: fourier at level 1, "
                       "relation at level N)")
        ->check(CLI::IsMember({"lattice", "fourier", "relation"}));

    // klf
    auto* sc_klf = app.add_subcommand("klf", "Kronecker limit function of Gamma0(N)");
    std::uint64_t klf_n = 1;
    std::string klf_cusp = "inf", klf_z;
    sc_klf->add_option("N", klf_n, "level")->required();
    sc_klf->add_option("--cusp", klf_cusp, "inf | 0")
        ->check(CLI::IsMember({"inf", "0"}));
    sc_klf->add_option("--z", klf_z, "point X,Y")->required();

    // scattering
    auto* sc_scat = app.add_subcommand("scattering", "scattering constants of Gamma0(N)");
    std::uint64_t scat_n = 1;
    bool scat_all = false, scat_json = false;
    sc_scat->add_option("N", scat_n, "level")->required();
    sc_scat->add_flag("--all-pairs", scat_all, "all (a,inf) and (a,0) families");
    sc_scat->add_flag("--json", scat_json, "emit JSON");

    // bounds
    auto* sc_bounds = app.add_subcommand("bounds", "canonical Green's function ledger");
    std::uint64_t bounds_n = 11;
    cb::BoundInputs bounds_inputs;
    bool bounds_json = false;
    double bounds_cx = 0.0;
    sc_bounds->add_option("N", bounds_n, "level")->required();
    sc_bounds->add_option("--d-x", bounds_inputs.d_x, "sup of can/shyp (default 1.0)");
    sc_bounds->add_option("--lambda1", bounds_inputs.lambda1,
                          "spectral gap lower bound (default 0.21)");
    auto* cx_opt = sc_bounds->add_option("--c-x", bounds_cx, "Selberg zeta constant");
    sc_bounds->add_flag("--json", bounds_json, "emit JSON");

    // sweep
    auto* sc_sweep = app.add_subcommand("sweep", "asymptotic ratio sweep, CSV output");
    std::uint64_t sweep_min = 0, sweep_max = 0;
    bool sweep_primes = false;
    std::string sweep_out;
    cb::BoundInputs sweep_inputs;
    double sweep_cx = 0.0;
    sc_sweep->add_option("--min", sweep_min, "first level")->required();
    sc_sweep->add_option("--max", sweep_max, "last level")->required();
    sc_sweep->add_flag("--primes-only", sweep_primes, "restrict to prime levels");
    sc_sweep->add_option("--out", sweep_out, "write CSV to FILE instead of stdout");
    sc_sweep->add_option("--d-x", sweep_inputs.d_x, "sup of can/shyp (default 1.0)");
    sc_sweep->add_option("--lambda1", sweep_inputs.lambda1,
                         "spectral gap lower bound (default 0.21)");
    auto* sweep_cx_opt = sc_sweep->add_option("--c-x", sweep_cx, "Selberg zeta constant");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "run the oracle suites");
    bool verify_fast = false;
    sc_verify->add_flag("--fast", verify_fast, "reduced ranges (sub-minute)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Config cfg = load_config(config_path);
        const int threads = thread_budget();

        if (sc_profile->parsed()) {
            const cb::Gamma0Profile p = cb::profile(prof_n);
            if (prof_json) std::printf("%s\n", cb::profile_to_json(p).c_str());
            else print_profile_table(p);
        } else if (sc_eis->parsed()) {
            const cb::HalfPlanePoint z = parse_point(eis_z);
            const std::uint64_t level = eis_level1 ? 1 : eis_level;
            std::string method = eis_method;
            if (method.empty()) method = (level == 1) ? "fourier" : "relation";
            double value = 0.0;
            if (method == "fourier") {
                if (level != 1)
                    throw CLI::ValidationError("--method",
                                               "fourier is available at level 1 only");
                cb::FourierTruncation trunc;
                trunc.q_tol = cfg.q_tol;
                value = cb::eisenstein_fourier(z, eis_s, trunc);
            } else if (method == "lattice") {
                const std::uint64_t q = cfg.lattice_cutoff
                                            ? cfg.lattice_cutoff
                                            : cb::lattice_cutoff_for_tol(z, eis_s, 1e-6);
                value = (level == 1) ? cb::eisenstein_lattice(z, eis_s, q)
                                     : cb::eisenstein_gamma0_lattice(z, eis_s, level, q);
            } else {
                value = cb::eisenstein_infty_gamma0(z, eis_s, level);
            }
            std::printf("%s\n", cb::fmt_sig(value, 12).c_str());
        } else if (sc_klf->parsed()) {
            const cb::HalfPlanePoint z = parse_point(klf_z);
            const double value = (klf_cusp == "0") ? cb::klf_zero_gamma0(z, klf_n)
                                                   : cb::klf_infty_gamma0(z, klf_n);
            std::printf("%s\n", cb::fmt_sig(value, 12).c_str());
        } else if (sc_scat->parsed()) {
            std::vector<cb::ScatteringReport> reports;
            reports.push_back(cb::scattering_const_0inf(scat_n));
            if (scat_all) {
                for (const cb::Cusp& a : cb::cusp_set(scat_n)) {
                    reports.push_back(cb::scattering_const_a_inf(a, scat_n));
                    reports.push_back(cb::scattering_const_a_0(a, scat_n));
                }
            }
            if (scat_json) {
                std::string out = "[";
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    if (i) out += ", ";
                    out += cb::scattering_report_to_json(reports[i]);
                }
                out += "]";
                std::printf("%s\n", out.c_str());
            } else {
                for (const auto& r : reports) print_report_table(r);
            }
        } else if (sc_bounds->parsed()) {
            if (cx_opt->count()) {
                bounds_inputs.c_x = bounds_cx;
                bounds_inputs.c_x_supplied = true;
            }
            const cb::BoundLedger led = cb::green_can_ledger(bounds_n, bounds_inputs);
            if (bounds_json) {
                std::printf("%s\n", cb::ledger_to_json(led).c_str());
            } else {
                std::printf("level            %llu\n",
                            static_cast<unsigned long long>(led.n));
                std::printf("main_scattering  %s\n",
                            cb::fmt_sig(led.main_scattering, 6).c_str());
                std::printf("cusp_sums        %s\n", cb::fmt_sig(led.cusp_sums, 6).c_str());
                std::printf("selberg_term     %s%s\n",
                            cb::fmt_sig(led.selberg_term, 6).c_str(),
                            bounds_inputs.c_x_supplied ? "" : "  (c_x defaulted to 0)");
                std::printf("elliptic_klf     %s\n",
                            cb::fmt_sig(led.elliptic_klf_term, 6).c_str());
                std::printf("delta_bound      %s\n",
                            cb::fmt_sig(led.delta.total, 6).c_str());
                std::printf("interval         [%s, %s]\n",
                            cb::fmt_sig(led.total_lower, 6).c_str(),
                            cb::fmt_sig(led.total_upper, 6).c_str());
            }
        } else if (sc_sweep->parsed()) {
            if (sweep_max < sweep_min)
                throw CLI::ValidationError("--max", "must be >= --min");
            if (sweep_cx_opt->count()) {
                sweep_inputs.c_x = sweep_cx;
                sweep_inputs.c_x_supplied = true;
            }
            std::vector<std::uint64_t> levels;
            for (std::uint64_t n = sweep_min; n <= sweep_max; ++n) levels.push_back(n);
            const auto rows = cb::asymptotic_sweep(levels, sweep_inputs, sweep_primes, threads);
            std::string notices;
            const std::string csv = cb::sweep_to_csv(rows, &notices);
            if (!notices.empty()) std::fputs(notices.c_str(), stderr);
            if (sweep_out.empty()) {
                std::fputs(csv.c_str(), stdout);
            } else {
                std::ofstream out(sweep_out, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot open " + sweep_out);
                out << csv;
            }
        } else if (sc_verify->parsed()) {
            cb::VerifyOptions opts;
            opts.richardson_kmin = cfg.richardson_kmin;
            opts.richardson_kmax = cfg.richardson_kmax;
            opts.quad_tol = cfg.quad_tol;
            opts.lattice_cutoff = cfg.lattice_cutoff;
            opts.q_tol = cfg.q_tol;
            const auto results = cb::run_verification(verify_fast, threads, opts);
            std::fputs(cb::format_verification(results).c_str(), stdout);
            for (const auto& r : results)
                if (!r.pass) return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
