#include "cuspbound/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cuspbound {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b, value, error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int j = 0; j < 7; ++j) resk += kWgk[j] * (fv[j] + fv[14 - j]);
    for (int j = 0; j < 3; ++j) resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    p.error = std::abs((resk - resg) * h);
    return p;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol) {
    if (!(b > a)) {
        if (a == b) return 0.0;
        throw std::invalid_argument("integrate: requires a < b");
    }
    std::vector<Panel> stack{evaluate_panel(f, a, b)};
    double total = 0.0;
    const int max_panels = 4000;
    int used = 1;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double tol_here =
            abs_tol * (p.b - p.a) / (b - a) + rel_tol * std::abs(total + p.value);
        if (p.error <= tol_here || used >= max_panels || (p.b - p.a) < 1e-14 * (b - a)) {
            total += p.value;
            continue;
        }
        const double m = 0.5 * (p.a + p.b);
        stack.push_back(evaluate_panel(f, p.a, m));
        stack.push_back(evaluate_panel(f, m, p.b));
        used += 2;
    }
    return total;
}

double richardson_limit(const std::function<double(double)>& F, int kmin, int kmax) {
    if (kmax < kmin) throw std::invalid_argument("richardson_limit: kmax < kmin");
    const int n = kmax - kmin + 1;
    std::vector<std::vector<double>> t(n);
    for (int i = 0; i < n; ++i) {
        t[i].resize(i + 1);
        t[i][0] = F(std::ldexp(1.0, -(kmin + i)));
        for (int j = 1; j <= i; ++j) {
            const double f = std::ldexp(1.0, j);  // 2^j
            t[i][j] = (f * t[i][j - 1] - t[i - 1][j - 1]) / (f - 1.0);
        }
    }
    // Walk the diagonal; stop where successive entries stop improving.
    double best = t[n - 1][n - 1];
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 1; i < n; ++i) {
        const double err = std::abs(t[i][i] - t[i - 1][i - 1]);
        if (err <= best_err) {
            best_err = err;
            best = t[i][i];
        }
    }
    return best;
}

}  // namespace cuspbound
