#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cuspbound/gamma0.hpp"
#include "cuspbound/rational.hpp"

namespace cuspbound {

// Scattering functions and constants of Gamma_0(N) for the three cusp-pair
// families (0,inf), (a,inf), (a,0). Constants are assembled exactly as
// (pi C / 3 + sum_p c_p log p) / v with rational coefficients c_p, so the
// specialization identities hold to fp rounding rather than accumulation
// error.

struct ScatteringReport {
    std::pair<Cusp, Cusp> pair;
    std::uint64_t n = 1;         // level
    double constant = 0.0;       // C_{p_k p_l}
    // Additive contributions before the division by v: name -> value.
    std::vector<std::pair<std::string, double>> closed_form_terms;
    double residue_check = 1.0;  // v * (residue of phi at s = 1); should be ~1
};

// sqrt(pi) Gamma(s-1/2)/Gamma(s) N^-s zeta(2s-1)/zeta(2s)
//   prod_{p|N} (p^2s - p)/(p^2s - 1);  s > 1/2, s != 1.
double scattering_fn_0inf(double s, std::uint64_t n);

// Scattering functions for the (a,inf) and (a,0) families (a = m/n' a cusp
// class); the multiplicity prefactors phi(n')/phi((n',N/n')) resp.
// phi(N/n')/phi((n',N/n')) are included so the residue at s = 1 is 1/v.
double scattering_fn_a_inf(double s, std::uint64_t cusp_den, std::uint64_t n);
double scattering_fn_a_0(double s, std::uint64_t cusp_den, std::uint64_t n);

ScatteringReport scattering_const_0inf(std::uint64_t n);
ScatteringReport scattering_const_a_inf(const Cusp& a, std::uint64_t n);
ScatteringReport scattering_const_a_0(const Cusp& a, std::uint64_t n);

// Class sums with multiplicity phi((n', N/n')): over classes a != inf of
// C_{a inf}, and over classes a != 0 of C_{a 0}.
double cusp_sum_a_inf(std::uint64_t n);
double cusp_sum_a_0(std::uint64_t n);

std::string scattering_report_to_json(const ScatteringReport& r);

namespace detail {
// Exact-form constant: value of (pi C/3 * q0 + sum c_p log p) / v. Exposed
// for the specialization-identity tests.
struct LogCombination {
    Rational c_const;                                     // multiplies pi C / 3
    std::vector<std::pair<std::uint64_t, Rational>> c_log; // p -> coeff of log p
};
LogCombination constant_terms_0inf(std::uint64_t n);
LogCombination constant_terms_a_inf(std::uint64_t cusp_den, std::uint64_t n);
LogCombination constant_terms_a_0(std::uint64_t cusp_den, std::uint64_t n);
double evaluate(const LogCombination& lc, std::uint64_t n);
}  // namespace detail

}  // namespace cuspbound
