// Test-only oracles, independent of the library's evaluation paths.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace oracles {

// Lower incomplete gamma gamma(a, x) by series / continued fraction
// (Numerical Recipes style), independent of any library quadrature.
inline double gamma_lower(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_lower: bad args");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // series for P(a,x)
        double ap = a, sum = 1.0 / a, del = sum;
        for (int n = 0; n < 500; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x));
    }
    // continued fraction for Q(a,x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-x + a * std::log(x)) * h;
    return std::exp(lg) - q;
}

inline double bessel_k_half(double t) {
    return std::sqrt(std::numbers::pi / (2.0 * t)) * std::exp(-t);
}

inline double strauss_exponent_classical(int N) {
    if (N < 2) throw std::invalid_argument("strauss closed form needs N >= 2");
    return (N + 1.0 + std::sqrt(double(N) * N + 10.0 * N - 7.0)) /
           (2.0 * (N - 1.0));
}

// Composite Simpson on [a, b]; brute-force reference integrator.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Central difference derivative with step h.
inline double diff1(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double diff2(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace oracles
