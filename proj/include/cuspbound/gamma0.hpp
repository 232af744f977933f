#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuspbound/rational.hpp"

namespace cuspbound {

// Canonical representative m/n of a cusp class of Gamma_0(N): gcd(m,n) = 1,
// n | N, and m is the least nonnegative integer coprime to n in its residue
// class mod gcd(n, N/n). The class n = 1 is the cusp 0, the class n = N is
// the cusp infinity.
struct Cusp {
    std::uint64_t m;
    std::uint64_t n;
    bool operator==(const Cusp&) const = default;
};

// Fixed point of an elliptic element, with exact rational coordinates
// (x and y^2 are rational for both orders) plus floating renderings.
struct EllipticPoint {
    double x;
    double y;
    int order;                // 2 or 3
    std::uint64_t n_index;    // the n in [0, N) that generated the point
    Rational x_exact;
    std::int64_t den;         // n^2+1 (order 2) or n^2-n+1 (order 3)
    Rational y2_exact() const;  // 1/den^2 resp. 3/(4 den^2)
};

struct Gamma0Profile {
    std::uint64_t n = 1;
    double volume = 0.0;             // v_Gamma
    Rational volume_over_pi;         // exact v_Gamma / pi
    std::uint64_t genus = 0;
    std::uint64_t cusp_count = 0;
    std::vector<Cusp> cusps;
    std::vector<EllipticPoint> elliptic;
    std::uint64_t nu2 = 0;
    std::uint64_t nu3 = 0;
};

// (pi N / 3) prod_{p|N} (1 + 1/p); exact as a rational multiple of pi.
Rational volume_over_pi(std::uint64_t n);
double volume(std::uint64_t n);

// sum_{d|N} phi(gcd(d, N/d)).
std::uint64_t cusp_count(std::uint64_t n);

// One canonical representative per class, ordered by (n, m).
std::vector<Cusp> cusp_set(std::uint64_t n);

// Brute-force enumeration of the fixed points (order 2 from n^2+1 = 0 mod N,
// order 3 from n^2-n+1 = 0 mod N).
std::vector<EllipticPoint> elliptic_points(std::uint64_t n);

// Closed-form counts (nu2, nu3) from the residue-symbol products.
std::pair<std::uint64_t, std::uint64_t> elliptic_counts(std::uint64_t n);

// Genus solved from the volume identity in exact rationals; throws
// std::logic_error if the solution is not a nonnegative integer.
std::uint64_t genus(std::uint64_t n);

Gamma0Profile profile(std::uint64_t n);

// JSON document with fields exactly: n, volume_over_pi, genus, cusp_count,
// nu2, nu3, cusps, elliptic.
std::string profile_to_json(const Gamma0Profile& p);

}  // namespace cuspbound
