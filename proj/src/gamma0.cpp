#include "cuspbound/gamma0.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cuspbound/arith.hpp"
#include "cuspbound/jsonout.hpp"
#include "cuspbound/specfun.hpp"

namespace cuspbound {

Rational volume_over_pi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("volume_over_pi: n must be positive");
    Rational v(static_cast<std::int64_t>(n), 3);
    for (const auto& [p, e] : factorize(n))
        v *= Rational(static_cast<std::int64_t>(p + 1), static_cast<std::int64_t>(p));
    return v;
}

double volume(std::uint64_t n) { return volume_over_pi(n).to_double() * kPi; }

std::uint64_t cusp_count(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cusp_count: n must be positive");
    std::uint64_t total = 0;
    for (std::uint64_t d : divisors(n)) total += euler_phi(std::gcd(d, n / d));
    return total;
}

std::vector<Cusp> cusp_set(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cusp_set: n must be positive");
    std::vector<Cusp> cusps;
    for (std::uint64_t den : divisors(n)) {
        const std::uint64_t g = std::gcd(den, n / den);
        for (std::uint64_t a = 0; a < g; ++a) {
            if (std::gcd(a, g) != 1) continue;
            // Least m >= 0 with m = a (mod g) and gcd(m, den) = 1.
            std::uint64_t m = a;
            while (std::gcd(m, den) != 1) m += g;
            cusps.push_back({m, den});
        }
    }
    return cusps;
}

Rational EllipticPoint::y2_exact() const {
    if (order == 2) return Rational(1, den) * Rational(1, den);
    return Rational(3, 4) * Rational(1, den) * Rational(1, den);
}

std::vector<EllipticPoint> elliptic_points(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("elliptic_points: n must be positive");
    std::vector<EllipticPoint> pts;
    for (std::uint64_t k = 0; k < n; ++k) {
        if ((k * k + 1) % n == 0) {
            const auto q = static_cast<std::int64_t>(k * k + 1);
            EllipticPoint e;
            e.order = 2;
            e.n_index = k;
            e.x_exact = Rational(static_cast<std::int64_t>(k), q);
            e.den = q;
            e.x = e.x_exact.to_double();
            e.y = 1.0 / static_cast<double>(q);
            pts.push_back(e);
        }
    }
    for (std::uint64_t k = 0; k < n; ++k) {
        if ((k * k - k + 1 + n) % n == 0) {  // +n keeps k = 0 well-defined
            const auto q = static_cast<std::int64_t>(k * k - k + 1);
            EllipticPoint e;
            e.order = 3;
            e.n_index = k;
            e.x_exact = Rational(2 * static_cast<std::int64_t>(k) + 1, 2 * q);
            e.den = q;
            e.x = e.x_exact.to_double();
            e.y = std::sqrt(3.0) / (2.0 * static_cast<double>(q));
            pts.push_back(e);
        }
    }
    return pts;
}

std::pair<std::uint64_t, std::uint64_t> elliptic_counts(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("elliptic_counts: n must be positive");
    const auto fac = factorize(n);
    std::uint64_t nu2 = 1, nu3 = 1;
    if (n % 4 == 0) {
        nu2 = 0;
    } else {
        for (const auto& [p, e] : fac) nu2 *= static_cast<std::uint64_t>(1 + residue_symbol(-1, p));
    }
    if (n % 9 == 0) {
        nu3 = 0;
    } else {
        for (const auto& [p, e] : fac) nu3 *= static_cast<std::uint64_t>(1 + residue_symbol(-3, p));
    }
    return {nu2, nu3};
}

std::uint64_t genus(std::uint64_t n) {
    const auto [nu2, nu3] = elliptic_counts(n);
    const Rational vol = volume_over_pi(n) / Rational(2);
    const Rational rhs = vol + Rational(2) -
                         Rational(static_cast<std::int64_t>(cusp_count(n))) -
                         Rational(static_cast<std::int64_t>(nu2), 2) -
                         Rational(2 * static_cast<std::int64_t>(nu3), 3);
    const Rational g = rhs / Rational(2);
    if (!g.is_integer() || g.num() < 0)
        throw std::logic_error("genus: volume identity yields a non-integral or negative genus");
    return static_cast<std::uint64_t>(g.num());
}

Gamma0Profile profile(std::uint64_t n) {
    Gamma0Profile p;
    p.n = n;
    p.volume_over_pi = volume_over_pi(n);
    p.volume = p.volume_over_pi.to_double() * kPi;
    p.genus = genus(n);
    p.cusps = cusp_set(n);
    p.cusp_count = p.cusps.size();
    if (p.cusp_count != cusp_count(n))
        throw std::logic_error("profile: cusp enumeration disagrees with the divisor sum");
    p.elliptic = elliptic_points(n);
    const auto [nu2, nu3] = elliptic_counts(n);
    p.nu2 = nu2;
    p.nu3 = nu3;
    std::uint64_t seen2 = 0, seen3 = 0;
    for (const auto& e : p.elliptic) (e.order == 2 ? seen2 : seen3)++;
    if (seen2 != nu2 || seen3 != nu3)
        throw std::logic_error("profile: closed-form elliptic counts disagree with enumeration");
    return p;
}

std::string profile_to_json(const Gamma0Profile& p) {
    std::string out = "{";
    out += "\"n\": " + std::to_string(p.n);
    out += ", \"volume_over_pi\": \"" + std::to_string(p.volume_over_pi.num()) + "/" +
           std::to_string(p.volume_over_pi.den()) + "\"";
    out += ", \"genus\": " + std::to_string(p.genus);
    out += ", \"cusp_count\": " + std::to_string(p.cusp_count);
    out += ", \"nu2\": " + std::to_string(p.nu2);
    out += ", \"nu3\": " + std::to_string(p.nu3);
    out += ", \"cusps\": [";
    for (std::size_t i = 0; i < p.cusps.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + std::to_string(p.cusps[i].m) + "/" + std::to_string(p.cusps[i].n) + "\"";
    }
    out += "], \"elliptic\": [";
    for (std::size_t i = 0; i < p.elliptic.size(); ++i) {
        const auto& e = p.elliptic[i];
        if (i) out += ", ";
        out += "{\"x\": " + fmt_sig(e.x, 12) + ", \"y\": " + fmt_sig(e.y, 12) +
               ", \"order\": " + std::to_string(e.order) +
               ", \"n_index\": " + std::to_string(e.n_index) + "}";
    }
    out += "]}";
    return out;
}

}  // namespace cuspbound
