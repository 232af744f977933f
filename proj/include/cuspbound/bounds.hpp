#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuspbound/gamma0.hpp"

namespace cuspbound {

// Assembly of the canonical-Green's-function expression at the cusp pair
// (0, infinity) with its explicit error budget, and the large-N sweep.

struct BoundInputs {
    double d_x = 1.0;          // sup of can/shyp
    double lambda1 = 0.21;     // spectral gap lower bound
    double c_x = 0.0;          // Selberg zeta constant (parameterized input)
    bool c_x_supplied = false; // provenance flag: true when set by the caller
};

struct DeltaBound {
    double elliptic_order_term = 0.0;  // (4 pi / v g) sum (1 + 1/ord)
    double elliptic_log_term = 0.0;    // (4 log 2 / v g) sum (ord + 1)
    double chyp_term = 0.0;            // 4 pi (d_x + 1)^2 / (lambda1 v)
    double volume_term = 0.0;          // 4 pi / v
    double log_term = 0.0;             // 2 log(4 pi) / g
    double parabolic_term = 0.0;       // (2 p / g v)(pi + 4 pi^2/3 + 1)
    double total = 0.0;
};

struct BoundLedger {
    std::uint64_t n = 1;
    double main_scattering = 0.0;   // 4 pi C_{0 inf}
    double cusp_sums = 0.0;         // (2 pi / g)(sum C_{0,j} + sum C_{inf,j})
    double selberg_term = 0.0;      // 4 pi c_x / (g v)
    double elliptic_klf_term = 0.0; // (2 pi / g) weighted KLF sum over elliptic pts
    DeltaBound delta;
    double total_lower = 0.0;
    double total_upper = 0.0;
};

struct SweepRow {
    std::uint64_t n = 0;
    std::uint64_t genus = 0;
    double volume = 0.0;
    double main = 0.0;           // 8 pi g (1-g) C_{0 inf}
    double cusp_corr = 0.0;      // 4 pi (1-g)(sum_{a != inf} C_{a inf} + sum_{a != 0} C_{a 0})
    double elliptic_corr = 0.0;  // 4 pi (1-g) weighted KLF sum
    double delta_bound = 0.0;
    double total = 0.0;
    double ratio = 0.0;          // total / (2 g log N)
    double abs_err = 0.0;        // |ratio - 1|
    bool skipped = false;        // genus <= 1
};

DeltaBound delta_x_bound(const Gamma0Profile& profile, const BoundInputs& inputs);

// 16 pi g^2 (d_x+1)^2 / (lambda1 v).
double c_hyp_bound(const Gamma0Profile& profile, const BoundInputs& inputs);

// (4 pi log 2 / v) sum (ord - 1).
double elliptic_integral_bound(const Gamma0Profile& profile);

// (4 pi^2/3 + 1) p / (g v).
double parabolic_remainder_bound(const Gamma0Profile& profile);

BoundLedger green_can_ledger(std::uint64_t n, const BoundInputs& inputs);

// One row per requested level; levels with genus <= 1 come back with
// skipped = true. Rows are computed in parallel (at most `threads` workers)
// and returned in input order.
std::vector<SweepRow> asymptotic_sweep(const std::vector<std::uint64_t>& n_values,
                                     const BoundInputs& inputs, bool primes_only,
                                     int threads = 1);

std::string ledger_to_json(const BoundLedger& ledger);

// CSV with header n,genus,volume,main,cusp_corr,elliptic_corr,delta_bound,
// total,ratio,abs_err; skipped rows are omitted (a notice goes to `notices`).
std::string sweep_to_csv(const std::vector<SweepRow>& rows, std::string* notices);

}  // namespace cuspbound
