#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "cuspbound/hyperbolic.hpp"
#include "cuspbound/quadrature.hpp"
#include "cuspbound/specfun.hpp"

using namespace cuspbound;

namespace {

HalfPlanePoint translate(const HalfPlanePoint& z) { return {z.x + 1.0, z.y}; }

HalfPlanePoint invert(const HalfPlanePoint& z) {
    const double n2 = z.x * z.x + z.y * z.y;
    return {-z.x / n2, z.y / n2};
}

}  // namespace

TEST_CASE("point-pair invariant values and invariance") {
    const HalfPlanePoint i(0, 1), i2(0, 2);
    CHECK(point_pair_u(i, i) == 0.0);
    CHECK(point_pair_u(i, i2) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(point_pair_u({1, 1}, {2, 1}) == doctest::Approx(0.25).epsilon(1e-15));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dx(-3.0, 3.0), dy(0.1, 4.0);
    for (int t = 0; t < 50; ++t) {
        const HalfPlanePoint z(dx(rng), dy(rng)), w(dx(rng), dy(rng));
        const double u = point_pair_u(z, w);
        CHECK(std::abs(point_pair_u(translate(z), translate(w)) - u) <= 1e-12 * (1 + u));
        CHECK(std::abs(point_pair_u(invert(z), invert(w)) - u) <= 1e-12 * (1 + u));
    }
    CHECK_THROWS_AS((HalfPlanePoint(0.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS((HalfPlanePoint(0.0, -1.0)), std::invalid_argument);
}

TEST_CASE("hyperbolic distance") {
    const HalfPlanePoint i(0, 1), i2(0, 2);
    CHECK(hyp_distance(i, i) == 0.0);
    CHECK(hyp_distance(i, i2) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(hyp_distance(invert(i), invert(i2)) ==
          doctest::Approx(hyp_distance(i, i2)).epsilon(1e-14));
    CHECK(hyp_distance(i2, i) == hyp_distance(i, i2));
}

TEST_CASE("free Green's function closed forms") {
    const HalfPlanePoint i(0, 1), i2(0, 2);
    CHECK(green_h(i, i2) == doctest::Approx(std::log(9.0)).epsilon(1e-14));
    // any pair with u = 1 gives log 2: take z = i, w = sqrt(3) + ... u((0,1),(2,1)) = 1
    CHECK(green_h({0, 1}, {2, 1}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    // both closed forms agree: log(1 + 1/u) = -log |(z-w)/(z-wbar)|^2
    const HalfPlanePoint a(1, 1), b(2, 3);
    const double u = point_pair_u(a, b);
    const double d2 = (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
    const double d2bar = (a.x - b.x) * (a.x - b.x) + (a.y + b.y) * (a.y + b.y);
    CHECK(green_h(a, b) == doctest::Approx(-std::log(d2 / d2bar)).epsilon(1e-12));
    CHECK(std::abs(green_h(a, b) - std::log1p(1.0 / u)) <= 1e-15);
    CHECK_THROWS_AS(green_h(i, i), std::invalid_argument);
}

TEST_CASE("green_h logarithmic singularity control") {
    // |green_h - log(1/u)| <= u for u <= 1e-3
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        const HalfPlanePoint z(0, 1), w(2.0 * eps, 1);  // u ~ eps^2
        const double u = point_pair_u(z, w);
        REQUIRE(u <= 1e-3);
        CHECK(std::abs(green_h(z, w) - std::log(1.0 / u)) <= u);
    }
}

TEST_CASE("resolvent kernel reduces to green_h at s = 1 and decays in s, y") {
    const HalfPlanePoint i(0, 1), i2(0, 2);
    CHECK(green_h_s(i, i2, 1.0) == doctest::Approx(std::log(9.0)).epsilon(1e-12));
    double prev = 1e9;
    for (double y : {2.0, 3.0, 5.0, 10.0}) {
        const double g = green_h_s(i, {0, y}, 2.0);
        CHECK(g < prev);
        CHECK(g > 0.0);
        prev = g;
    }
    CHECK_THROWS_AS(green_h_s(i, i, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(green_h_s(i, i2, 0.5), std::invalid_argument);
}

TEST_CASE("resolvent kernel matches the weighted heat-kernel quadrature at s=2") {
    const HalfPlanePoint z(0, 1), w(0, 2);
    // 4 pi int e^{-s(s-1)t} K_H dt with s = 2
    auto f = [&](double t) { return std::exp(-2.0 * t) * heat_kernel_h(t, z, w); };
    const double quad = 4.0 * kPi *
        (integrate(f, 1e-4, 1.0, 1e-8, 1e-9) + integrate(f, 1.0, 25.0, 1e-8, 1e-9));
    CHECK(green_h_s(z, w, 2.0) == doctest::Approx(quad).epsilon(1e-4));
}

TEST_CASE("heat kernel symmetry, invariance, positivity") {
    const HalfPlanePoint i(0, 1), i2(0, 2);
    CHECK(heat_kernel_h(0.5, i, i2) ==
          doctest::Approx(heat_kernel_h(0.5, i2, i)).epsilon(1e-12));
    CHECK(heat_kernel_h(1.0, i, i2) ==
          doctest::Approx(heat_kernel_h(1.0, invert(i), invert(i2))).epsilon(1e-10));
    for (double t : {0.05, 0.3, 1.0, 5.0})
        CHECK(heat_kernel_h(t, i, i2) > 0.0);
    CHECK_THROWS_AS(heat_kernel_h(0.0, i, i2), std::invalid_argument);
    // off-diagonal evaluation converges to the diagonal formula
    CHECK(heat_kernel_h(0.7, i, {1e-9, 1.0}) ==
          doctest::Approx(heat_kernel_diag(0.7)).epsilon(1e-8));
}

TEST_CASE("diagonal heat kernel small-time and decay behavior") {
    CHECK(4.0 * kPi * 1e-3 * heat_kernel_diag(1e-3) == doctest::Approx(1.0).epsilon(0.02));
    double prev = 1e9;
    for (double t : {1.0, 2.0, 4.0, 8.0}) {
        const double v = heat_kernel_diag(t) * std::exp(t / 4.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(heat_kernel_diag(10.0) < heat_kernel_diag(1.0));
    CHECK_THROWS_AS(heat_kernel_diag(0.0), std::invalid_argument);
}

TEST_CASE("green function from heat kernel quadrature") {
    const HalfPlanePoint i(0, 1), i2(0, 2), w(1, 2);
    CHECK(green_from_heat(i, i2, 1e-5) == doctest::Approx(std::log(9.0)).epsilon(1e-4));
    CHECK(green_from_heat(i, w, 1e-5) == doctest::Approx(green_h(i, w)).epsilon(1e-4));
    // tightening the tail tolerance moves the value by less than 1e-4
    const double loose = green_from_heat(i, i2, 1e-4);
    const double tight = green_from_heat(i, i2, 1e-6);
    CHECK(std::abs(loose - tight) < 1e-4);
    CHECK_THROWS_AS(green_from_heat(i, i, 1e-5), std::invalid_argument);
}

TEST_CASE("selberg local factor") {
    CHECK(selberg_local_factor(50.0, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
    // prod_{n>=0} (1 - 2^{-(2+n)}), frozen from the direct product
    CHECK(selberg_local_factor(std::log(2.0), 2.0, 1e-10) ==
          doctest::Approx(0.57757619017320484).epsilon(1e-8));
    CHECK(selberg_local_factor(1.0, 3.0) > selberg_local_factor(1.0, 2.0));
    const double f = selberg_local_factor(1.0, 2.0);
    CHECK(f > 0.0);
    CHECK(f < 1.0);
    CHECK_THROWS_AS(selberg_local_factor(0.0, 2.0), std::invalid_argument);
}
