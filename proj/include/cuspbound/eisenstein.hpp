#pragma once

#include <complex>
#include <cstdint>

#include "cuspbound/hyperbolic.hpp"

namespace cuspbound {

// Full-modular-group objects: the real-analytic Eisenstein series by lattice
// sum and by Fourier expansion, its constant-term data (scattering function
// and constant), the modular discriminant, and the Kronecker limit function.

struct FourierTruncation {
    std::uint64_t n_max = 64;   // nonzero Fourier modes kept
    double q_tol = 1e-16;       // q-series / Bessel tail cutoff
};

// (1/2) sum over coprime (c,d) with max(|c|,|d|) <= cutoff of y^s/|cz+d|^(2s).
// Requires s > 1.
double eisenstein_lattice(const HalfPlanePoint& z, double s, std::uint64_t cutoff);

// Cutoff for which the omitted lattice tail (integral comparison estimate)
// stays below half of tol. Practical for s >= 1.6 or so.
std::uint64_t lattice_cutoff_for_tol(const HalfPlanePoint& z, double s, double tol);

// Same series truncated by the group-invariant criterion Im(gamma z) > theta
// instead of a coefficient box; the kept term multiset is identical at z and
// gamma z, so values match to fp rounding. Used by the invariance checks.
double eisenstein_lattice_threshold(const HalfPlanePoint& z, double s, double theta);

// sqrt(pi) Gamma(s-1/2)/Gamma(s) zeta(2s-1)/zeta(2s); s > 1/2, s != 1.
double scattering_phi_level1(double s);

// pi^s Gamma(s)^-1 zeta(2s)^-1 |n|^(s-1) sum_{d|n} d^(1-2s); n != 0, s >= 1.
double fourier_phi_n_level1(std::int64_t n, double s);

// y^s + phi(s) y^(1-s) + sum of Whittaker modes
// W_s(nz) = 2 sqrt(|n|y) K_{s-1/2}(2 pi |n| y) e(n x). Requires s > 1, y >= 0.1.
double eisenstein_fourier(const HalfPlanePoint& z, double s,
                          const FourierTruncation& trunc = {});

// Discriminant q prod (1-q^n)^24, q = e(z); requires y >= y_min.
std::complex<double> delta_modular(const HalfPlanePoint& z, double y_min = 0.05,
                                   double q_tol = 1e-16);

// log |Delta(z)|, evaluated in the log domain (safe for large y).
double log_abs_delta(const HalfPlanePoint& z);

// Kronecker limit function at the cusp infinity:
// -(1/4pi) log(y^12 |Delta|^2) + C, with C the scattering constant below.
double klf_infty_level1(const HalfPlanePoint& z);

// C = (6/pi)(1 - log(4 pi) - 12 zeta'(-1)).
double scattering_constant_level1();

namespace detail {
// Direct formula on the far side of the functional equation (0 < s < 1/2);
// used by the phi(s) phi(1-s) = 1 verification.
double scattering_phi_level1_any(double s);
}  // namespace detail

}  // namespace cuspbound
