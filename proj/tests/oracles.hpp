#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check.

#include <cstdint>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracles {

inline std::vector<std::pair<std::uint64_t, unsigned>> factor_slow(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    return f;
}

inline std::uint64_t phi_by_count(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

inline bool prime_slow(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// zeta(k), integer k >= 2: direct sum plus midpoint-integral tail.
inline double zeta_int(int k) {
    double s = 0.0;
    const int cut = 4000;
    for (int n = cut; n >= 1; --n) s += std::pow(n, -k);
    return s + std::pow(cut + 0.5, 1.0 - k) / (k - 1.0);
}

// beta(2) = sum (-1)^k / (2k+1)^2 with midpoint tail.
inline double beta2() {
    const int cut = 20000;
    double s = 0.0;
    int sign = (cut % 2 == 0) ? 1 : -1;
    for (int k = cut - 1; k >= 0; --k) {
        sign = -sign;
        s += sign / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    }
    return s + ((cut % 2 == 0) ? 0.5 : -0.5) / ((2.0 * cut + 1.0) * (2.0 * cut + 1.0));
}

}  // namespace oracles
