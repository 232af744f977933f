#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuspbound/arith.hpp"
#include "cuspbound/bounds.hpp"
#include "cuspbound/eisenstein.hpp"
#include "cuspbound/gamma0.hpp"
#include "cuspbound/gamma0n.hpp"
#include "cuspbound/hyperbolic.hpp"
#include "cuspbound/scattering.hpp"
#include "cuspbound/specfun.hpp"

namespace py = pybind11;
using namespace cuspbound;

namespace {

HalfPlanePoint as_point(double x, double y) { return HalfPlanePoint(x, y); }

py::dict profile_dict(std::uint64_t n) {
    const Gamma0Profile p = profile(n);
    py::dict d;
    d["n"] = p.n;
    d["volume"] = p.volume;
    d["volume_over_pi"] = p.volume_over_pi.to_string();
    d["genus"] = p.genus;
    d["cusp_count"] = p.cusp_count;
    d["nu2"] = p.nu2;
    d["nu3"] = p.nu3;
    py::list cusps;
    for (const auto& c : p.cusps)
        cusps.append(py::make_tuple(c.m, c.n));
    d["cusps"] = cusps;
    py::list ell;
    for (const auto& e : p.elliptic) {
        py::dict ed;
        ed["x"] = e.x;
        ed["y"] = e.y;
        ed["order"] = e.order;
        ed["n_index"] = e.n_index;
        ell.append(ed);
    }
    d["elliptic"] = ell;
    return d;
}

py::dict report_dict(const ScatteringReport& r) {
    py::dict d;
    d["pair"] = py::make_tuple(py::make_tuple(r.pair.first.m, r.pair.first.n),
                               py::make_tuple(r.pair.second.m, r.pair.second.n));
    d["n"] = r.n;
    d["constant"] = r.constant;
    py::dict terms;
    for (const auto& [k, v] : r.closed_form_terms) terms[k.c_str()] = v;
    d["terms"] = terms;
    d["residue_check"] = r.residue_check;
    return d;
}

py::dict ledger_dict(std::uint64_t n, double d_x, double lambda1, double c_x) {
    BoundInputs in;
    in.d_x = d_x;
    in.lambda1 = lambda1;
    in.c_x = c_x;
    in.c_x_supplied = true;
    const BoundLedger led = green_can_ledger(n, in);
    py::dict d;
    d["n"] = led.n;
    d["main_scattering"] = led.main_scattering;
    d["cusp_sums"] = led.cusp_sums;
    d["selberg_term"] = led.selberg_term;
    d["elliptic_klf_term"] = led.elliptic_klf_term;
    d["delta_x_bound"] = led.delta.total;
    d["total_lower"] = led.total_lower;
    d["total_upper"] = led.total_upper;
    return d;
}

py::list sweep_list(std::uint64_t lo, std::uint64_t hi, bool primes_only, int threads) {
    std::vector<std::uint64_t> levels;
    for (std::uint64_t n = lo; n <= hi; ++n) levels.push_back(n);
    py::list out;
    for (const auto& r : asymptotic_sweep(levels, BoundInputs{}, primes_only, threads)) {
        if (r.skipped) continue;
        py::dict d;
        d["n"] = r.n;
        d["genus"] = r.genus;
        d["volume"] = r.volume;
        d["main"] = r.main;
        d["cusp_corr"] = r.cusp_corr;
        d["elliptic_corr"] = r.elliptic_corr;
        d["delta_bound"] = r.delta_bound;
        d["total"] = r.total;
        d["ratio"] = r.ratio;
        d["abs_err"] = r.abs_err;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Analytic invariants of the modular curves X0(N)";

    // arithmetic
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("moebius", &moebius, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));
    m.def("is_prime", &is_prime, py::arg("n"));

    // special functions
    m.def("gamma_fn", &gamma_fn, py::arg("x"));
    m.def("zeta_fn", &zeta_fn, py::arg("s"));
    m.def("bessel_k", &bessel_k, py::arg("nu"), py::arg("x"));
    m.def("zeta_prime_minus1", &zeta_prime_minus1);

    // hyperbolic plane
    m.def("point_pair_u",
          [](double x1, double y1, double x2, double y2) {
              return point_pair_u(as_point(x1, y1), as_point(x2, y2));
          },
          py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"));
    m.def("hyp_distance",
          [](double x1, double y1, double x2, double y2) {
              return hyp_distance(as_point(x1, y1), as_point(x2, y2));
          });
    m.def("green_h",
          [](double x1, double y1, double x2, double y2) {
              return green_h(as_point(x1, y1), as_point(x2, y2));
          });
    m.def("green_h_s",
          [](double x1, double y1, double x2, double y2, double s) {
              return green_h_s(as_point(x1, y1), as_point(x2, y2), s);
          });
    m.def("heat_kernel_h",
          [](double t, double x1, double y1, double x2, double y2) {
              return heat_kernel_h(t, as_point(x1, y1), as_point(x2, y2));
          });
    m.def("heat_kernel_diag", &heat_kernel_diag, py::arg("t"));
    m.def("green_from_heat",
          [](double x1, double y1, double x2, double y2, double tail_tol) {
              return green_from_heat(as_point(x1, y1), as_point(x2, y2), tail_tol);
          },
          py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"),
          py::arg("tail_tol") = 1e-5);
    m.def("selberg_local_factor", &selberg_local_factor, py::arg("ell"), py::arg("s"),
          py::arg("tol") = 1e-12);

    // group structure
    m.def("volume", &volume, py::arg("n"));
    m.def("cusp_count", &cusp_count, py::arg("n"));
    m.def("genus", &genus, py::arg("n"));
    m.def("elliptic_counts",
          [](std::uint64_t n) {
              const auto [a, b] = elliptic_counts(n);
              return py::make_tuple(a, b);
          },
          py::arg("n"));
    m.def("profile", &profile_dict, py::arg("n"));
    m.def("profile_json", [](std::uint64_t n) { return profile_to_json(profile(n)); },
          py::arg("n"));

    // Eisenstein series and Kronecker limit functions
    m.def("eisenstein_lattice",
          [](double x, double y, double s, std::uint64_t cutoff) {
              return eisenstein_lattice(as_point(x, y), s, cutoff);
          },
          py::arg("x"), py::arg("y"), py::arg("s"), py::arg("cutoff"));
    m.def("eisenstein_fourier",
          [](double x, double y, double s) {
              return eisenstein_fourier(as_point(x, y), s);
          },
          py::arg("x"), py::arg("y"), py::arg("s"));
    m.def("eisenstein_level",
          [](double x, double y, double s, std::uint64_t n) {
              return eisenstein_infty_gamma0(as_point(x, y), s, n);
          },
          py::arg("x"), py::arg("y"), py::arg("s"), py::arg("n"));
    m.def("scattering_phi_level1", &scattering_phi_level1, py::arg("s"));
    m.def("scattering_constant_level1", &scattering_constant_level1);
    m.def("klf_level1",
          [](double x, double y) { return klf_infty_level1(as_point(x, y)); },
          py::arg("x"), py::arg("y"));
    m.def("klf_infty",
          [](double x, double y, std::uint64_t n) {
              return klf_infty_gamma0(as_point(x, y), n);
          },
          py::arg("x"), py::arg("y"), py::arg("n"));
    m.def("klf_zero",
          [](double x, double y, std::uint64_t n) {
              return klf_zero_gamma0(as_point(x, y), n);
          },
          py::arg("x"), py::arg("y"), py::arg("n"));
    m.def("klf_elliptic_weighted_sum", &klf_elliptic_weighted_sum, py::arg("n"));

    // scattering constants
    m.def("scattering_const_0inf",
          [](std::uint64_t n) { return report_dict(scattering_const_0inf(n)); },
          py::arg("n"));
    m.def("scattering_const_a_inf",
          [](std::uint64_t m, std::uint64_t den, std::uint64_t n) {
              return report_dict(scattering_const_a_inf(Cusp{m, den}, n));
          },
          py::arg("m"), py::arg("den"), py::arg("n"));
    m.def("scattering_const_a_0",
          [](std::uint64_t m, std::uint64_t den, std::uint64_t n) {
              return report_dict(scattering_const_a_0(Cusp{m, den}, n));
          },
          py::arg("m"), py::arg("den"), py::arg("n"));
    m.def("cusp_sum_a_inf", &cusp_sum_a_inf, py::arg("n"));
    m.def("cusp_sum_a_0", &cusp_sum_a_0, py::arg("n"));

    // bounds and sweep
    m.def("green_can_ledger", &ledger_dict, py::arg("n"), py::arg("d_x") = 1.0,
          py::arg("lambda1") = 0.21, py::arg("c_x") = 0.0);
    m.def("sweep", &sweep_list, py::arg("lo"), py::arg("hi"),
          py::arg("primes_only") = true, py::arg("threads") = 1);
}
