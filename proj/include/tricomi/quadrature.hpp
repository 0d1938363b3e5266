#pragma once

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricomi {

// Raised when an adaptive rule exhausts its interval budget before reaching
// the requested tolerance, or when the integrand returns a non-finite value.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1], ascending
    std::vector<double> weights;
};

// Cached n-point Gauss-Legendre rule. Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

namespace detail {

// Gauss-Kronrod 7-15 pair (QUADPACK dqk15 abscissae/weights).
inline constexpr double gk_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
inline void gk15_panel(F&& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int j = 0; j < 7; ++j) {
        const double x = h * gk_x[j];
        fv[j] = f(c - x);
        fv[14 - j] = f(c + x);
    }
    double resg = gk_wg[3] * fv[7];
    double resk = gk_wk[7] * fv[7];
    double resabs = gk_wk[7] * std::abs(fv[7]);
    for (int j = 0; j < 7; ++j) {
        const double fs = fv[j] + fv[14 - j];
        resk += gk_wk[j] * fs;
        resabs += gk_wk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) resg += gk_wg[j / 2] * fs;
    }
    // QUADPACK-style inflated error estimate; the raw |K - G| difference
    // underestimates badly on sharply peaked panels
    const double reskh = 0.5 * resk;
    double resasc = gk_wk[7] * std::abs(fv[7] - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += gk_wk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
    result = resk * h;
    err = std::abs(resk - resg) * h;
    const double asc = resasc * std::abs(h);
    if (asc != 0.0 && err != 0.0)
        err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    const double eps_floor = resabs * std::abs(h) * 50.0 * 1e-16;
    err = std::max(err, eps_floor);
}

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b].
// Bisects the worst panel until sum(err) <= max(abs_tol, rel_tol*|sum|).
template <class F>
double adaptive_gk(F&& f, double a, double b, double abs_tol = 1e-14,
                   double rel_tol = 1e-12, int max_intervals = 4000) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::priority_queue<detail::Segment> segs;
    double total = 0.0, total_err = 0.0;
    auto push = [&](double lo, double hi) {
        detail::Segment s{lo, hi, 0.0, 0.0};
        detail::gk15_panel(f, lo, hi, s.value, s.err);
        if (!std::isfinite(s.value))
            throw QuadratureError("adaptive_gk: non-finite integrand value");
        total += s.value;
        total_err += s.err;
        segs.push(s);
    };
    push(a, b);
    int n = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (n >= max_intervals)
            throw QuadratureError("adaptive_gk: tolerance not reached with " +
                                  std::to_string(n) + " intervals");
        detail::Segment worst = segs.top();
        segs.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution; accept its contribution as-is
            total += worst.value;
            continue;
        }
        push(worst.a, mid);
        push(mid, worst.b);
        ++n;
    }
    return sign * total;
}

// Fixed n-point Gauss-Legendre integration of f over [a, b].
template <class F>
double fixed_gl(F&& f, double a, double b, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(c + h * rule.nodes[i]);
    return sum * h;
}

}  // namespace tricomi
