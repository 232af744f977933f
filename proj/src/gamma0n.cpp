#include "cuspbound/gamma0n.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cuspbound/arith.hpp"
#include "cuspbound/gamma0.hpp"
#include "cuspbound/specfun.hpp"

namespace cuspbound {

HalfPlanePoint reduce_to_fundamental_domain(const HalfPlanePoint& z) {
    double x = z.x, y = z.y;
    for (int iter = 0; iter < 20000; ++iter) {
        x -= std::round(x);
        const double n2 = x * x + y * y;
        if (n2 >= 1.0 - 1e-15) break;
        x = -x / n2;
        y = y / n2;
    }
    x -= std::round(x);
    return HalfPlanePoint(x, y);
}

namespace {

double klf_level1_reduced(double x, double y) {
    return klf_infty_level1(reduce_to_fundamental_domain(HalfPlanePoint(x, y)));
}

double euler_prime_factor(std::uint64_t n, double s) {
    double prod = 1.0;
    for (const auto& [p, e] : factorize(n)) {
        const double p2s = std::pow(static_cast<double>(p), 2.0 * s);
        prod *= p2s / (p2s - 1.0);
    }
    return prod;
}

// (log N - sum_{p|N} log p/(p+1)) / v_Gamma
double klf_shift(std::uint64_t n) {
    double s = std::log(static_cast<double>(n));
    for (const auto& [p, e] : factorize(n))
        s -= std::log(static_cast<double>(p)) / (static_cast<double>(p) + 1.0);
    return s / volume(n);
}

}  // namespace

double eisenstein_infty_gamma0(const HalfPlanePoint& z, double s, std::uint64_t n,
                               std::uint64_t cutoff) {
    if (n == 0) throw std::invalid_argument("eisenstein_infty_gamma0: n must be positive");
    if (!(s > 1.0)) throw std::invalid_argument("eisenstein_infty_gamma0: requires s > 1");
    FourierTruncation trunc;
    trunc.n_max = cutoff;
    double sum = 0.0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        const double scale = static_cast<double>(n) / static_cast<double>(d);
        // E_1 is invariant under the full modular group; reducing keeps the
        // Fourier argument well inside its convergence region (y >= sqrt(3)/2).
        const HalfPlanePoint w =
            reduce_to_fundamental_domain(HalfPlanePoint(z.x * scale, z.y * scale));
        sum += mu * std::pow(d, -s) * eisenstein_fourier(w, s, trunc);
    }
    return std::pow(n, -s) * euler_prime_factor(n, s) * sum;
}

double eisenstein_gamma0_lattice(const HalfPlanePoint& z, double s, std::uint64_t n,
                                 std::uint64_t cutoff) {
    if (n == 0) throw std::invalid_argument("eisenstein_gamma0_lattice: n positive");
    if (!(s > 1.0)) throw std::invalid_argument("eisenstein_gamma0_lattice: requires s > 1");
    const auto Q = static_cast<std::int64_t>(cutoff);
    const auto step = static_cast<std::int64_t>(n);
    const double ys = std::pow(z.y, s);
    double sum = 2.0 * ys;  // (0, +-1)
    for (std::int64_t c = step; c <= Q; c += step) {
        const double cy2 = (c * z.y) * (c * z.y);
        for (std::int64_t d = -Q; d <= Q; ++d) {
            if (std::gcd(c, std::abs(d)) != 1) continue;
            const double re = c * z.x + d;
            sum += 2.0 * ys * std::pow(re * re + cy2, -s);  // c and -c
        }
    }
    return 0.5 * sum;
}

double klf_infty_gamma0(const HalfPlanePoint& z, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("klf_infty_gamma0: n must be positive");
    double sum = 0.0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        const double scale = static_cast<double>(n) / static_cast<double>(d);
        sum += static_cast<double>(mu) / static_cast<double>(d) *
               klf_level1_reduced(z.x * scale, z.y * scale);
    }
    return euler_prime_factor(n, 1.0) / static_cast<double>(n) * sum - klf_shift(n);
}

double klf_zero_gamma0(const HalfPlanePoint& z, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("klf_zero_gamma0: n must be positive");
    double sum = 0.0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        sum += static_cast<double>(mu) / static_cast<double>(d) *
               klf_level1_reduced(z.x * d, z.y * d);
    }
    return euler_prime_factor(n, 1.0) / static_cast<double>(n) * sum - klf_shift(n);
}

double klf_pair_sum(const HalfPlanePoint& z, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("klf_pair_sum: n must be positive");
    double rhs = 0.0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = moebius(d);
        if (mu == 0) continue;
        const double scale = static_cast<double>(n) / static_cast<double>(d);
        rhs += static_cast<double>(mu) / static_cast<double>(d) *
               (klf_level1_reduced(z.x * scale, z.y * scale) +
                klf_level1_reduced(z.x * d, z.y * d));
    }
    rhs *= euler_prime_factor(n, 1.0) / static_cast<double>(n);
    const double lhs = klf_zero_gamma0(z, n) + klf_infty_gamma0(z, n) + 2.0 * klf_shift(n);
    if (std::abs(lhs - rhs) > 1e-7)
        throw std::logic_error("klf_pair_sum: the two evaluations disagree beyond 1e-7");
    return rhs;
}

double klf_elliptic_weighted_sum(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("klf_elliptic_weighted_sum: n positive");
    const double shift2 = 2.0 * klf_shift(n);
    double total = 0.0;
    for (const auto& e : elliptic_points(n)) {
        const HalfPlanePoint z(e.x, e.y);
        const double pair = klf_pair_sum(z, n) - shift2;  // K_0(e) + K_inf(e)
        total += (1.0 - 1.0 / e.order) * pair;
    }
    return total;
}

}  // namespace cuspbound
