#pragma once

namespace cuspbound {

// Point z = x + iy of the upper half-plane; construction enforces y > 0.
struct HalfPlanePoint {
    double x;
    double y;
    HalfPlanePoint(double x_, double y_);
};

// Point-pair invariant u(z,w) = |z-w|^2 / (4 Im z Im w).
double point_pair_u(const HalfPlanePoint& z, const HalfPlanePoint& w);

// Hyperbolic distance; computed as 2 asinh(sqrt(u)), which is exact in the
// sense that u = sinh^2(d/2).
double hyp_distance(const HalfPlanePoint& z, const HalfPlanePoint& w);

// Free-space Green's function log(1 + 1/u); z = w rejected.
double green_h(const HalfPlanePoint& z, const HalfPlanePoint& w);

// Resolvent kernel Gamma(s)^2/Gamma(2s) u^{-s} F(s,s;2s;-1/u) for s >= 1,
// evaluated through the Euler transformation (argument 1/(1+u) in (0,1)).
double green_h_s(const HalfPlanePoint& z, const HalfPlanePoint& w, double s);

// Heat kernel on H for t > 0. Off the diagonal the distance integral is used
// with the endpoint singularity removed by r = rho + v^2; on the diagonal the
// r tanh(pi r) spectral integral.
double heat_kernel_h(double t, const HalfPlanePoint& z, const HalfPlanePoint& w);
double heat_kernel_diag(double t);

// 4 pi int_0^inf K_H(t;z,w) dt, truncated once the e^{-t/4} tail bound falls
// below tail_tol. Serves as the quadrature oracle for green_h.
double green_from_heat(const HalfPlanePoint& z, const HalfPlanePoint& w,
                       double tail_tol);

// Local Euler factor prod_{n>=0} (1 - e^{-(s+n) ell}) for a closed geodesic
// of length ell > 0, truncated when the remaining factors are within tol of 1.
double selberg_local_factor(double ell, double s, double tol = 1e-12);

}  // namespace cuspbound
