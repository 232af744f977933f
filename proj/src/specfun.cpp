#include "cuspbound/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "cuspbound/quadrature.hpp"

namespace cuspbound {

namespace {

// Lanczos g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_positive(double x) {
    // x >= 0.5 assumed.
    double a = kLanczos[0];
    for (int k = 1; k < 9; ++k) a += kLanczos[k] / (x - 1.0 + k);
    const double t = x + 6.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

// B_{2k}/(2k)! for k = 1..12.
constexpr double kBernOverFact[12] = {
    8.3333333333333333e-02,    // B2/2!  = 1/12
    -1.3888888888888889e-03,   // B4/4!  = -1/720
    3.3068783068783069e-05,    // B6/6!
    -8.2671957671957672e-07,   // B8/8!
    2.0876756987868099e-08,    // B10/10!
    -5.2841901386874932e-10,   // B12/12!
    1.3382536530684679e-11,    // B14/14!
    -3.3896802963225829e-13,   // B16/16!
    8.5860620562778446e-15,    // B18/18!
    -2.1748686985580637e-16,   // B20/20!
    5.5090028283602295e-18,    // B22/22!
    -1.3954464685812522e-19};  // B24/24!

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("gamma_fn: requires x > 0");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
    return gamma_positive(x);
}

namespace detail {

double gamma_signed(double x) {
    if (x > 0.0) return gamma_fn(x);
    if (x == std::floor(x)) throw std::invalid_argument("gamma_signed: pole");
    return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
}

double zeta_signed(double s) {
    if (s == 1.0) throw std::invalid_argument("zeta_signed: pole at s = 1");
    if (s > 0.0) return zeta_fn(s);
    if (s == 0.0) return -0.5;
    // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), 1-s > 1 here.
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(0.5 * kPi * s) *
           gamma_fn(1.0 - s) * zeta_fn(1.0 - s);
}

}  // namespace detail

double zeta_fn(double s) {
    if (s == 1.0) throw std::invalid_argument("zeta_fn: pole at s = 1");
    if (!(s > 0.0)) throw std::invalid_argument("zeta_fn: requires s > 0");
    constexpr int M = 24;
    double head = 0.0;
    for (int n = M - 1; n >= 1; --n) head += std::pow(n, -s);
    // M^{1-s}/(s-1) = 1/(s-1) + expm1((1-s) log M)/(s-1): keeps the smooth
    // part accurate through the pole neighbourhood.
    const double lnM = std::log(static_cast<double>(M));
    const double pole = 1.0 / (s - 1.0) + std::expm1((1.0 - s) * lnM) / (s - 1.0);
    double tail = 0.5 * std::pow(M, -s);
    double poch = s;                       // s(s+1)...(s+2k-2), built incrementally
    double mpow = std::pow(M, -s - 1.0);   // M^{-s-2k+1}
    for (int k = 1; k <= 12; ++k) {
        tail += kBernOverFact[k - 1] * poch * mpow;
        poch *= (s + 2 * k - 1) * (s + 2 * k);
        mpow /= static_cast<double>(M) * M;
    }
    return head + pole + tail;
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_k: requires x > 0");
    nu = std::abs(nu);
    if (nu > 10.0) throw std::invalid_argument("bessel_k: |nu| <= 10 supported");
    // log-integrand h(t) = nu t - x cosh t peaks at t* = asinh(nu/x).
    const double tstar = (nu > 0.0) ? std::asinh(nu / x) : 0.0;
    const double hpeak = nu * tstar - x * std::cosh(tstar);
    double T = tstar + 1.0;
    while (nu * T - x * std::cosh(T) > hpeak - 45.0) T += 1.0;
    const double scale = std::exp(hpeak);
    auto f = [&](double t) { return std::exp(nu * t - x * std::cosh(t) - hpeak) *
                                     0.5 * (1.0 + std::exp(-2.0 * nu * t)); };
    const double v = integrate(f, 0.0, T, 1e-14, 1e-13);
    return scale * v;
}

double zeta_prime_minus1() {
    return -0.16542114370045092921;
}

}  // namespace cuspbound
