#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "cuspbound/bounds.hpp"
#include "cuspbound/gamma0.hpp"
#include "cuspbound/scattering.hpp"
#include "cuspbound/specfun.hpp"

using namespace cuspbound;

TEST_CASE("delta bound sub-terms reproduce independent arithmetic at N = 11") {
    const BoundInputs in;
    const auto p = profile(11);
    const auto b = delta_x_bound(p, in);
    // no elliptic points at level 11
    CHECK(b.elliptic_order_term == 0.0);
    CHECK(b.elliptic_log_term == 0.0);
    const double v = 4.0 * kPi;
    CHECK(b.chyp_term == doctest::Approx(4.0 * kPi * 4.0 / (0.21 * v)).epsilon(1e-14));
    CHECK(b.volume_term == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.log_term == doctest::Approx(2.0 * std::log(4.0 * kPi)).epsilon(1e-14));
    CHECK(b.parabolic_term ==
          doctest::Approx(4.0 / v * (kPi + 4.0 * kPi * kPi / 3.0 + 1.0)).epsilon(1e-14));
    CHECK(b.total == doctest::Approx(b.chyp_term + b.volume_term + b.log_term +
                                     b.parabolic_term).epsilon(1e-15));
}

TEST_CASE("delta bound edge cases and monotonicity") {
    // no elliptic points at N = 16 (4 | 16 kills order 2, and order 3 is empty);
    // X0(16) has genus 0, so the bound itself is exercised at the elliptic-free
    // genus-1 level 36 instead
    CHECK(profile(16).elliptic.empty());
    const auto p36 = profile(36);
    CHECK(p36.elliptic.empty());
    CHECK(p36.genus == 1);
    const auto b36 = delta_x_bound(p36, BoundInputs{});
    CHECK(b36.elliptic_order_term == 0.0);
    CHECK(b36.elliptic_log_term == 0.0);
    // decreasing in lambda1, increasing in d_x
    const auto p11 = profile(11);
    BoundInputs lo, hi;
    lo.lambda1 = 0.21, hi.lambda1 = 0.5;
    CHECK(delta_x_bound(p11, hi).total < delta_x_bound(p11, lo).total);
    lo = {}, hi = {};
    hi.d_x = 2.0;
    CHECK(delta_x_bound(p11, hi).total > delta_x_bound(p11, lo).total);
    CHECK_THROWS_AS(delta_x_bound(profile(1), BoundInputs{}), std::invalid_argument);
    BoundInputs bad;
    bad.lambda1 = 0.0;
    CHECK_THROWS_AS(delta_x_bound(p11, bad), std::invalid_argument);
    bad = {};
    bad.d_x = -1.0;
    CHECK_THROWS_AS(c_hyp_bound(p11, bad), std::invalid_argument);
}

TEST_CASE("c_hyp bound values and scaling") {
    const BoundInputs in;
    CHECK(c_hyp_bound(profile(11), in) == doctest::Approx(16.0 / 0.21).epsilon(1e-12));
    BoundInputs doubled;
    doubled.d_x = 3.0;  // (d_x + 1) doubles
    CHECK(c_hyp_bound(profile(11), doubled) ==
          doctest::Approx(4.0 * c_hyp_bound(profile(11), in)).epsilon(1e-12));
    // g^2 scaling between levels 11 (g=1) and 37 (g=2) at equal inputs
    const double r = c_hyp_bound(profile(37), in) / c_hyp_bound(profile(11), in);
    CHECK(r == doctest::Approx(4.0 * volume(11) / volume(37)).epsilon(1e-12));
}

TEST_CASE("elliptic integral and parabolic remainder bounds") {
    CHECK(elliptic_integral_bound(profile(16)) == 0.0);
    CHECK(elliptic_integral_bound(profile(2)) ==
          doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-13));
    // N = 13: counts (2,2), sum (ord-1) = 2*1 + 2*2 = 6
    CHECK(elliptic_integral_bound(profile(13)) ==
          doctest::Approx(4.0 * kPi * std::log(2.0) / volume(13) * 6.0).epsilon(1e-13));
    CHECK(parabolic_remainder_bound(profile(11)) ==
          doctest::Approx((4.0 * kPi * kPi / 3.0 + 1.0) * 2.0 / (4.0 * kPi))
              .epsilon(1e-13));
    CHECK(parabolic_remainder_bound(profile(37)) ==
          doctest::Approx((4.0 * kPi * kPi / 3.0 + 1.0) * 2.0 / (2.0 * volume(37)))
              .epsilon(1e-13));
}

TEST_CASE("ledger assembly and interval width") {
    const BoundInputs in;
    const BoundLedger led = green_can_ledger(11, in);
    CHECK(led.total_upper - led.total_lower ==
          doctest::Approx(2.0 * led.delta.total).epsilon(1e-15));
    CHECK(led.main_scattering ==
          doctest::Approx(4.0 * kPi * scattering_const_0inf(11).constant).epsilon(1e-12));
    CHECK(led.selberg_term == 0.0);
    const BoundLedger led36 = green_can_ledger(36, in);
    CHECK(led36.elliptic_klf_term == 0.0);
    // linearity in c_x: centers differ by exactly 4 pi c_x / (g v)
    BoundInputs with_cx;
    with_cx.c_x = std::pow(11.0, 0.1);
    const BoundLedger led_cx = green_can_ledger(11, with_cx);
    const double shift = (led_cx.total_upper + led_cx.total_lower) / 2.0 -
                         (led.total_upper + led.total_lower) / 2.0;
    CHECK(shift == doctest::Approx(4.0 * kPi * with_cx.c_x / volume(11)).epsilon(1e-12));
    CHECK_THROWS_AS(green_can_ledger(1, in), std::invalid_argument);
    CHECK_THROWS_AS(green_can_ledger(2, in), std::invalid_argument);
}

TEST_CASE("sweep rows: structure, skipping, determinism across thread counts") {
    const BoundInputs in;
    const auto rows = asymptotic_sweep({11, 22, 23, 101}, in, false, 2);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].skipped);        // genus 1
    CHECK(!rows[1].skipped);       // N = 22 has genus 2
    CHECK(rows[1].genus == 2);
    for (const auto& r : rows) {
        if (r.skipped) continue;
        CHECK(std::isfinite(r.total));
        CHECK(r.ratio == doctest::Approx(r.total / (2.0 * static_cast<double>(r.genus) *
                                                    std::log(static_cast<double>(r.n))))
                             .epsilon(1e-15));
    }
    // primes_only filters composites
    const auto primes = asymptotic_sweep({100, 101, 102, 103}, in, true, 1);
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].n == 101);
    CHECK(primes[1].n == 103);
    // identical CSV across thread counts
    std::vector<std::uint64_t> range;
    for (std::uint64_t n = 10000; n <= 10120; ++n) range.push_back(n);
    std::string n1, n2;
    const std::string csv1 = sweep_to_csv(asymptotic_sweep(range, in, true, 1), &n1);
    const std::string csv4 = sweep_to_csv(asymptotic_sweep(range, in, true, 4), &n2);
    CHECK(csv1 == csv4);
    CHECK(n1 == n2);
}

TEST_CASE("sweep decade errors shrink and the main term dominates") {
    const BoundInputs in;
    const auto rows = asymptotic_sweep({101, 1009, 10007}, in, true, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].abs_err > rows[1].abs_err);
    CHECK(rows[1].abs_err > rows[2].abs_err);
    CHECK(rows[2].main > 0.0);  // 8 pi g (1-g) C < 0 twice over once log N dominates
    CHECK(rows[2].abs_err <= 0.25);
}

TEST_CASE("ledger json carries the named sub-terms") {
    const std::string j = ledger_to_json(green_can_ledger(11, BoundInputs{}));
    for (const char* key : {"\"main_scattering\"", "\"cusp_sums\"", "\"selberg_term\"",
                            "\"elliptic_klf_term\"", "\"delta_x_bound\"",
                            "\"chyp_term\"", "\"total_lower\"", "\"total_upper\""})
        CHECK(j.find(key) != std::string::npos);
}
