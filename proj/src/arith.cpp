#include "cuspbound/arith.hpp"

#include <stdexcept>

namespace cuspbound {

PrimeFactorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    PrimeFactorization f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be positive");
    auto f = factorize(n);
    for (const auto& [p, e] : f)
        if (e > 1) return 0;
    return (f.size() % 2 == 0) ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2)
        if (n % p == 0) return false;
    return true;
}

int residue_symbol(std::int64_t a, std::uint64_t p) {
    if (a == -1) {
        if (p == 2) return 0;
        return (p % 4 == 1) ? 1 : -1;
    }
    if (a == -3) {
        if (p == 3) return 0;
        return (p % 3 == 1) ? 1 : -1;
    }
    throw std::invalid_argument("residue_symbol: a must be -1 or -3");
}

}  // namespace cuspbound
