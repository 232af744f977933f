#pragma once

namespace cuspbound {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Euler Gamma for x > 0 (Lanczos). Poles at x <= 0 are rejected.
double gamma_fn(double x);

// Riemann zeta for s > 0, s != 1 (Euler-Maclaurin with the pole term split
// through expm1 so values track 1/(s-1) + gamma + O(s-1) tightly near s = 1).
double zeta_fn(double s);

// Modified Bessel K_nu(x) for x > 0, |nu| <= 10, via the integral
// representation int_0^inf e^{-x cosh t} cosh(nu t) dt with the tail
// truncated where the integrand falls below 1e-18 of its peak.
double bessel_k(double nu, double x);

// zeta'(-1) = 1/12 - log A (Glaisher-Kinkelin), to full double precision.
double zeta_prime_minus1();

namespace detail {
// Reflection extensions used by the scattering functional-equation checks;
// valid at any non-pole real argument.
double gamma_signed(double x);
double zeta_signed(double s);
}  // namespace detail

}  // namespace cuspbound
