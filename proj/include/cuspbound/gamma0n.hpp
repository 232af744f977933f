#pragma once

#include <cstdint>

#include "cuspbound/eisenstein.hpp"
#include "cuspbound/hyperbolic.hpp"

namespace cuspbound {

// Level-N Eisenstein and Kronecker limit functions, all routed through
// level-1 evaluations at transformed points.

// Translate/invert z into the standard fundamental domain of the full
// modular group (|x| <= 1/2, |z| >= 1). Values of level-1 invariants are
// unchanged; needed because divisor-scaled elliptic points can have tiny y.
HalfPlanePoint reduce_to_fundamental_domain(const HalfPlanePoint& z);

// E_N(z,s) = N^-s prod_{p|N} p^2s/(p^2s - 1) sum_{d|N} mu(d) d^-s E_1(Nz/d, s),
// with E_1 by Fourier expansion (modes capped by `cutoff`). Requires s > 1.
double eisenstein_infty_gamma0(const HalfPlanePoint& z, double s, std::uint64_t n,
                               std::uint64_t cutoff = 64);

// Direct coset sum over (c,d) coprime, N | c, max(|c|,|d|) <= cutoff.
// Slow; the independent cross-check for the relation above.
double eisenstein_gamma0_lattice(const HalfPlanePoint& z, double s, std::uint64_t n,
                                 std::uint64_t cutoff);

// Kronecker limit functions of Gamma_0(N) at the cusps infinity and 0:
//   K_inf(z) = (1/N) prod p^2/(p^2-1) sum_d (mu(d)/d) K_1(Nz/d) - shift(N)
//   K_0(z)   = same with K_1(d z), where shift(N) = (log N - sum_p log p/(p+1))/v.
double klf_infty_gamma0(const HalfPlanePoint& z, std::uint64_t n);
double klf_zero_gamma0(const HalfPlanePoint& z, std::uint64_t n);

// K_0(z) + K_inf(z) + 2 shift(N), evaluated both from the two KLFs and from
// the combined divisor sum; throws std::logic_error if they disagree beyond
// 1e-7, returns the divisor-sum value.
double klf_pair_sum(const HalfPlanePoint& z, std::uint64_t n);

// sum over elliptic fixed points of (1 - 1/ord) (K_0(e) + K_inf(e)).
double klf_elliptic_weighted_sum(std::uint64_t n);

}  // namespace cuspbound
