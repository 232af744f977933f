#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "cuspbound/arith.hpp"
#include "cuspbound/rational.hpp"
#include "oracles.hpp"

using namespace cuspbound;

TEST_CASE("factorize matches trial-division oracle") {
    CHECK(factorize(1).empty());
    CHECK(factorize(60) == PrimeFactorization{{2, 2}, {3, 1}, {5, 1}});
    CHECK(factorize(10007) == PrimeFactorization{{10007, 1}});
    CHECK(oracles::prime_slow(10007));
    for (std::uint64_t n : {2ull, 97ull, 1024ull, 9699690ull, 123456ull}) {
        const auto f = factorize(n);
        const auto g = oracles::factor_slow(n);
        REQUIRE(f.size() == g.size());
        std::uint64_t back = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f[i].p == g[i].first);
            CHECK(f[i].e == g[i].second);
            for (unsigned k = 0; k < f[i].e; ++k) back *= f[i].p;
        }
        CHECK(back == n);
    }
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("euler_phi against gcd count") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == oracles::phi_by_count(12));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(euler_phi(n) == oracles::phi_by_count(n));
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("phi is multiplicative on random coprime pairs") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> dist(1, 100000);
    int done = 0;
    while (done < 200) {
        const std::uint64_t a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1 || a * b > 100000) continue;
        CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
        ++done;
    }
}

TEST_CASE("moebius basics and divisor sums") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("sum of phi over divisors returns n") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t s = 0;
        for (std::uint64_t d : divisors(n)) s += euler_phi(d);
        REQUIRE(s == n);
    }
}

TEST_CASE("moebius identities exact as rationals up to 1e4") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        Rational s1(0), s2(0), p1(1), p2(1);
        for (std::uint64_t d : divisors(n)) {
            const int mu = moebius(d);
            if (mu == 0) continue;
            s1 += Rational(mu, static_cast<std::int64_t>(d));
            s2 += Rational(mu, static_cast<std::int64_t>(d * d));
        }
        for (const auto& [p, e] : factorize(n)) {
            const auto ip = static_cast<std::int64_t>(p);
            p1 *= Rational(ip - 1, ip);
            p2 *= Rational(ip * ip - 1, ip * ip);
        }
        REQUIRE(s1 == p1);
        REQUIRE(s2 == p2);
    }
}

TEST_CASE("residue symbols agree with solvability mod p") {
    CHECK(residue_symbol(-1, 2) == 0);
    CHECK(residue_symbol(-1, 13) == 1);
    CHECK(residue_symbol(-3, 11) == -1);
    CHECK_THROWS_AS(residue_symbol(-2, 5), std::invalid_argument);
    for (std::uint64_t p = 2; p <= 10000; ++p) {
        if (!oracles::prime_slow(p)) continue;
        bool sq1 = false, sq3 = false;
        for (std::uint64_t x = 0; x < p; ++x) {
            if ((x * x + 1) % p == 0) sq1 = true;
            if ((x * x + p * p - x + 1) % p == 0) sq3 = true;
        }
        // symbol +1 iff solvable (p unramified); 0 at the ramified prime.
        const int s1 = residue_symbol(-1, p);
        const int s3 = residue_symbol(-3, p);
        if (p != 2) REQUIRE(sq1 == (s1 == 1));
        if (p != 3) REQUIRE(sq3 == (s3 == 1));
        if (p == 2) REQUIRE(s1 == 0);
        if (p == 3) REQUIRE(s3 == 0);
    }
}

TEST_CASE("rational arithmetic normalizes and survives identities") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(7, 3).to_string() == "7/3");
    CHECK(Rational(4).to_string() == "4");
    CHECK_THROWS_AS((Rational(1, 0)), std::invalid_argument);
}
