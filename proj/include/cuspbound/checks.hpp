#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cuspbound {

// The oracle suites behind `verify` and the acceptance gate. Every check is
// deterministic: identical inputs produce byte-identical report text.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // deterministic summary (worst deviations etc.)
};

// Truncation/tolerance knobs shared by the oracle suites. Criterion
// tolerances themselves are pinned and not configurable.
struct VerifyOptions {
    int richardson_kmin = 8;
    int richardson_kmax = 16;
    double quad_tol = 1e-8;          // heat-kernel tail truncation
    std::uint64_t lattice_cutoff = 0;  // 0 = adaptive per point
    double q_tol = 1e-16;            // Fourier/q-series cutoff
};

// fast = reduced ranges (sub-minute); full ranges otherwise.
std::vector<CheckResult> run_verification(bool fast, int threads,
                                          const VerifyOptions& opts = {});

// One line per check: "[PASS|FAIL] <name> -- <detail>".
std::string format_verification(const std::vector<CheckResult>& results);

}  // namespace cuspbound
