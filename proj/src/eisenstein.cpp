#include "cuspbound/eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cuspbound/arith.hpp"
#include "cuspbound/specfun.hpp"

namespace cuspbound {

namespace {

// |cz+d|^(-2s) with fast paths for integer and half-integer 2s.
struct PowerKernel {
    double s;
    int twice_s;   // 2s when 2s is a small integer, else 0
    explicit PowerKernel(double s_) : s(s_) {
        const double t = 2.0 * s_;
        twice_s = (t == std::floor(t) && t <= 16.0) ? static_cast<int>(t) : 0;
    }
    double operator()(double q2) const {  // q2 = |cz+d|^2
        if (twice_s) {
            double base = (twice_s & 1) ? std::sqrt(q2) : q2;
            int e = (twice_s & 1) ? twice_s : twice_s / 2;
            double r = 1.0;
            while (e) {
                if (e & 1) r *= base;
                base *= base;
                e >>= 1;
            }
            return 1.0 / r;
        }
        return std::pow(q2, -s);
    }
};

}  // namespace

double eisenstein_lattice(const HalfPlanePoint& z, double s, std::uint64_t cutoff) {
    if (!(s > 1.0)) throw std::invalid_argument("eisenstein_lattice: requires s > 1");
    if (cutoff == 0) throw std::invalid_argument("eisenstein_lattice: cutoff >= 1");
    const auto Q = static_cast<std::int64_t>(cutoff);
    const PowerKernel pk(s);
    const double ys = std::pow(z.y, s);
    double sum = 0.0;
    for (std::int64_t c = -Q; c <= Q; ++c) {
        const double cx = c * z.x;
        const double cy2 = (c * z.y) * (c * z.y);
        for (std::int64_t d = -Q; d <= Q; ++d) {
            if (c == 0 && d == 0) continue;
            if (std::gcd(std::abs(c), std::abs(d)) != 1) continue;
            const double re = cx + d;
            sum += pk(re * re + cy2);
        }
    }
    return 0.5 * ys * sum;
}

std::uint64_t lattice_cutoff_for_tol(const HalfPlanePoint& z, double s, double tol) {
    if (!(s > 1.0)) throw std::invalid_argument("lattice_cutoff_for_tol: s > 1");
    // Integral comparison: tail over max(|c|,|d|) > Q is about
    // 5 y^(1-s) I_s Q^(2-2s)/(2s-2), I_s = sqrt(pi) Gamma(s-1/2)/Gamma(s).
    const double I = std::sqrt(kPi) * gamma_fn(s - 0.5) / gamma_fn(s);
    const double c = 5.0 * std::pow(z.y, 1.0 - s) * I / (2.0 * s - 2.0);
    const double Q = std::pow(c / (0.5 * tol), 1.0 / (2.0 * s - 2.0));
    if (!(Q < 2e5)) throw std::invalid_argument(
        "lattice_cutoff_for_tol: tolerance unreachable at this s");
    return static_cast<std::uint64_t>(Q) + 8;
}

double eisenstein_lattice_threshold(const HalfPlanePoint& z, double s, double theta) {
    if (!(s > 1.0)) throw std::invalid_argument("eisenstein_lattice_threshold: s > 1");
    if (!(theta > 0.0) || theta >= z.y)
        throw std::invalid_argument("eisenstein_lattice_threshold: 0 < theta < y");
    // Keep coprime (c,d) with y/|cz+d|^2 > theta, i.e. |cz+d|^2 < y/theta.
    const double r2 = z.y / theta;
    const auto cmax = static_cast<std::int64_t>(std::sqrt(r2) / z.y) + 1;
    const PowerKernel pk(s);
    double sum = std::pow(z.y, s);  // c = 0, d = +-1 pair halved twice
    for (std::int64_t c = 1; c <= cmax; ++c) {
        const double cy2 = (c * z.y) * (c * z.y);
        if (cy2 >= r2) break;
        const double w = std::sqrt(r2 - cy2);
        const auto dlo = static_cast<std::int64_t>(std::ceil(-c * z.x - w));
        const auto dhi = static_cast<std::int64_t>(std::floor(-c * z.x + w));
        for (std::int64_t d = dlo; d <= dhi; ++d) {
            if (std::gcd(c, std::abs(d)) != 1) continue;
            const double re = c * z.x + d;
            const double q2 = re * re + cy2;
            if (q2 >= r2) continue;
            // (c,d) and (-c,-d) are one coset; count once.
            sum += std::pow(z.y, s) * pk(q2);
        }
    }
    return sum;
}

double scattering_phi_level1(double s) {
    if (s == 1.0) throw std::invalid_argument("scattering_phi_level1: pole at s = 1");
    if (!(s > 0.5)) throw std::invalid_argument("scattering_phi_level1: requires s > 1/2");
    return std::sqrt(kPi) * gamma_fn(s - 0.5) / gamma_fn(s) *
           zeta_fn(2.0 * s - 1.0) / zeta_fn(2.0 * s);
}

namespace detail {

double scattering_phi_level1_any(double s) {
    if (s > 0.5) return scattering_phi_level1(s);
    return std::sqrt(kPi) * gamma_signed(s - 0.5) / gamma_signed(s) *
           zeta_signed(2.0 * s - 1.0) / zeta_signed(2.0 * s);
}

}  // namespace detail

double fourier_phi_n_level1(std::int64_t n, double s) {
    if (n == 0) throw std::invalid_argument("fourier_phi_n_level1: n != 0");
    if (!(s >= 1.0)) throw std::invalid_argument("fourier_phi_n_level1: requires s >= 1");
    const std::uint64_t an = std::abs(n);
    double divsum = 0.0;
    for (std::uint64_t d : divisors(an)) divsum += std::pow(d, 1.0 - 2.0 * s);
    return std::pow(kPi, s) / gamma_fn(s) / zeta_fn(2.0 * s) *
           std::pow(an, s - 1.0) * divsum;
}

double eisenstein_fourier(const HalfPlanePoint& z, double s,
                          const FourierTruncation& trunc) {
    if (!(s > 1.0)) throw std::invalid_argument("eisenstein_fourier: requires s > 1");
    if (z.y < 0.1) throw std::invalid_argument("eisenstein_fourier: requires y >= 0.1");
    double value = std::pow(z.y, s) + scattering_phi_level1(s) * std::pow(z.y, 1.0 - s);
    for (std::uint64_t n = 1; n <= trunc.n_max; ++n) {
        const double bess = bessel_k(s - 0.5, 2.0 * kPi * n * z.y);
        const double mode = fourier_phi_n_level1(static_cast<std::int64_t>(n), s) *
                            2.0 * std::sqrt(n * z.y) * bess;
        value += 2.0 * mode * std::cos(2.0 * kPi * n * z.x);
        if (std::abs(mode) < trunc.q_tol) break;
    }
    return value;
}

std::complex<double> delta_modular(const HalfPlanePoint& z, double y_min, double q_tol) {
    if (z.y < y_min) throw std::invalid_argument("delta_modular: y below y_min");
    const std::complex<double> q =
        std::exp(std::complex<double>(0.0, 2.0 * kPi) * std::complex<double>(z.x, z.y));
    std::complex<double> prod = 1.0;
    std::complex<double> qn = 1.0;
    const double aq = std::abs(q);
    double aqn = 1.0;
    while (true) {
        qn *= q;
        aqn *= aq;
        if (aqn < q_tol) break;
        std::complex<double> f = 1.0 - qn;
        std::complex<double> f2 = f * f;
        std::complex<double> f4 = f2 * f2;
        std::complex<double> f8 = f4 * f4;
        prod *= f8 * f8 * f8;  // (1-q^n)^24
    }
    return q * prod;
}

double log_abs_delta(const HalfPlanePoint& z) {
    double acc = -2.0 * kPi * z.y;
    const double a = std::exp(-2.0 * kPi * z.y);  // |q|
    double an = 1.0;
    for (int n = 1;; ++n) {
        an *= a;
        if (an < 1e-18) break;
        const double re = an * std::cos(2.0 * kPi * n * z.x);
        const double im = an * std::sin(2.0 * kPi * n * z.x);
        acc += 12.0 * std::log((1.0 - re) * (1.0 - re) + im * im);  // 24 log|1-q^n|
    }
    return acc;
}

double klf_infty_level1(const HalfPlanePoint& z) {
    return -(3.0 / kPi) * std::log(z.y) - log_abs_delta(z) / (2.0 * kPi) +
           scattering_constant_level1();
}

double scattering_constant_level1() {
    return 6.0 / kPi * (1.0 - std::log(4.0 * kPi) - 12.0 * zeta_prime_minus1());
}

}  // namespace cuspbound
