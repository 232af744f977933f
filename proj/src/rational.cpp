#include "cuspbound/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace cuspbound {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr auto lo = static_cast<__int128>(std::numeric_limits<std::int64_t>::min());
    constexpr auto hi = static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
    if (n < lo || n > hi || d > hi)
        throw std::overflow_error("Rational: reduced value exceeds 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    Rational r = from_i128(n, d);
    num_ = r.num_;
    den_ = r.den_;
}

Rational Rational::operator+(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.num_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from_i128(static_cast<__int128>(num_) * o.den_,
                     static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace cuspbound
