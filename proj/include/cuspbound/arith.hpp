#pragma once

#include <cstdint>
#include <vector>

#include "cuspbound/rational.hpp"

namespace cuspbound {

// Exact multiplicative arithmetic. All functions reject n = 0 and are pure.

struct PrimeFactor {
    std::uint64_t p;
    unsigned e;
    bool operator==(const PrimeFactor&) const = default;
};

// Factors in strictly increasing p; empty for n = 1.
using PrimeFactorization = std::vector<PrimeFactor>;

PrimeFactorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// 0 if n is not squarefree, else (-1)^(number of prime factors).
int moebius(std::uint64_t n);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Quadratic residue symbols (a/p) for a in {-1, -3} and p prime, with the
// ramified cases (-1/2) and (-3/3) fixed to 0 so the order-2/order-3 fixed
// point counts match brute-force enumeration.
int residue_symbol(std::int64_t a, std::uint64_t p);

}  // namespace cuspbound
