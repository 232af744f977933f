#pragma once

#include <functional>

namespace cuspbound {

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. Bisects until the
// local Kronrod-minus-Gauss estimate is below the budgeted share of abs_tol
// (plus rel_tol of the running total). Depth-limited; on hitting the limit
// the best estimate is kept, so the routine always returns.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-12);

// Richardson extrapolation of F(eps) at eps = 2^-k, k = kmin..kmax, assuming
// F(eps) = L + c1*eps + c2*eps^2 + ... Returns the Neville-table entry with
// the smallest consecutive-difference error estimate (stable against fp noise
// in F at tiny eps).
double richardson_limit(const std::function<double(double)>& F, int kmin, int kmax);

}  // namespace cuspbound
