#include "cuspbound/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>

#include "cuspbound/quadrature.hpp"
#include "cuspbound/specfun.hpp"

namespace cuspbound {

HalfPlanePoint::HalfPlanePoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0)) throw std::invalid_argument("HalfPlanePoint: requires y > 0");
}

double point_pair_u(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    return (dx * dx + dy * dy) / (4.0 * z.y * w.y);
}

double hyp_distance(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    return 2.0 * std::asinh(std::sqrt(point_pair_u(z, w)));
}

double green_h(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    const double u = point_pair_u(z, w);
    if (u == 0.0) throw std::invalid_argument("green_h: singular at z = w");
    return std::log1p(1.0 / u);
}

double green_h_s(const HalfPlanePoint& z, const HalfPlanePoint& w, double s) {
    if (!(s >= 1.0)) throw std::invalid_argument("green_h_s: requires s >= 1");
    const double u = point_pair_u(z, w);
    if (u == 0.0) throw std::invalid_argument("green_h_s: singular at z = w");
    // Euler transform: u^{-s} F(s,s;2s;-1/u) = (1+u)^{-s} F(s,s;2s;w), w = 1/(1+u).
    const double arg = 1.0 / (1.0 + u);
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 200000; ++n) {
        term *= (s + n) * (s + n) / ((2.0 * s + n) * (n + 1.0)) * arg;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    const double prefactor = gamma_fn(s) * gamma_fn(s) / gamma_fn(2.0 * s);
    return prefactor * std::pow(1.0 + u, -s) * sum;
}

namespace {

// Distance-integral heat kernel at hyperbolic separation rho >= 0.
double heat_kernel_rho(double t, double rho) {
    if (rho == 0.0) return heat_kernel_diag(t);
    const double cosh_rho = std::cosh(rho);
    // r = rho + v^2 removes the inverse-square-root endpoint.
    // e^{-r^2/4t} forces r^2 <= rho^2 + 200 t before dropping below ~1e-22
    // of the endpoint value.
    const double r_max = std::sqrt(rho * rho + 200.0 * t);
    const double v_max = std::sqrt(r_max - rho);
    auto f = [&](double v) {
        const double r = rho + v * v;
        const double dc = std::cosh(r) - cosh_rho;
        if (dc <= 0.0) {
            // v = 0 limit: (cosh r - cosh rho) ~ sinh(rho) v^2.
            return 2.0 * rho * std::exp(-rho * rho / (4.0 * t)) /
                   std::sqrt(std::sinh(rho));
        }
        return 2.0 * v * r * std::exp(-r * r / (4.0 * t)) / std::sqrt(dc);
    };
    const double integral = integrate(f, 0.0, v_max, 1e-13, 1e-11);
    const double norm = std::sqrt(2.0) * std::exp(-t / 4.0) /
                        std::pow(4.0 * kPi * t, 1.5);
    return norm * integral;
}

}  // namespace

double heat_kernel_h(double t, const HalfPlanePoint& z, const HalfPlanePoint& w) {
    if (!(t > 0.0)) throw std::invalid_argument("heat_kernel_h: requires t > 0");
    return heat_kernel_rho(t, hyp_distance(z, w));
}

double heat_kernel_diag(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("heat_kernel_diag: requires t > 0");
    const double r_max = std::sqrt(52.0 / t);
    auto f = [&](double r) { return std::exp(-r * r * t) * r * std::tanh(kPi * r); };
    return std::exp(-t / 4.0) / (2.0 * kPi) * integrate(f, 0.0, r_max, 1e-13, 1e-11);
}

double green_from_heat(const HalfPlanePoint& z, const HalfPlanePoint& w,
                       double tail_tol) {
    if (!(tail_tol > 0.0)) throw std::invalid_argument("green_from_heat: tail_tol > 0");
    const double rho = hyp_distance(z, w);
    if (rho == 0.0) throw std::invalid_argument("green_from_heat: singular at z = w");
    // Small-t cutoff: K_H(t) <= C t^{-3/2} e^{-rho^2/4t}; drop once that is
    // below tail_tol/4 relative to the total.
    double t_lo = rho * rho / (4.0 * (std::log(1.0 / tail_tol) + 12.0));
    t_lo = std::min(t_lo, 0.5);
    // Large-t cutoff from K_diag(t) <= (sqrt(pi)/8) e^{-t/4} t^{-3/2}:
    // 4 pi int_T^inf <= 2 pi^{3/2} T^{-3/2} e^{-T/4} 4 / ... iterate on T.
    double T = 8.0;
    auto tail_bound = [](double T_) {
        return 4.0 * kPi * std::sqrt(kPi) / 2.0 * std::exp(-T_ / 4.0) /
               std::pow(T_, 1.5);
    };
    while (tail_bound(T) > 0.25 * tail_tol) T *= 1.5;
    auto f = [&](double t) { return heat_kernel_rho(t, rho); };
    const double mid = integrate(f, t_lo, 1.0, tail_tol * 1e-3, 1e-9);
    const double high = integrate(f, 1.0, T, tail_tol * 1e-3, 1e-9);
    return 4.0 * kPi * (mid + high);
}

double selberg_local_factor(double ell, double s, double tol) {
    if (!(ell > 0.0)) throw std::invalid_argument("selberg_local_factor: ell > 0");
    if (!(s > 0.0)) throw std::invalid_argument("selberg_local_factor: s > 0");
    double prod = 1.0;
    for (int n = 0;; ++n) {
        const double q = std::exp(-(s + n) * ell);
        prod *= (1.0 - q);
        // Remaining factors differ from 1 by less than q/(1-e^{-ell}) total.
        if (q / -std::expm1(-ell) < tol) break;
    }
    return prod;
}

}  // namespace cuspbound
