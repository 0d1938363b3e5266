#include "tricomi/eigenfunctions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "tricomi/quadrature.hpp"
#include "tricomi/special_functions.hpp"

namespace tricomi {

namespace {

constexpr double kPhiTol = 1e-13;

// Scaled spherical mean Q(r) = sum w_i sin^{N-2}(psi_i) e^{r(cos psi_i - 1)},
// so that phi(r) = e^r Q(r) / Q(0). Computing numerator and denominator with
// the same rule makes phi(0) = 1 exact. with_cos weights the integrand by
// cos(psi), which yields the scaled derivative.
double spherical_mean(int N, double r, int n, bool with_cos) {
    double sum = 0.0;
    if (N == 2) {
        // Chebyshev nodes: equal weights after the cos substitution
        for (int i = 0; i < n; ++i) {
            const double c = std::cos(std::numbers::pi * (2.0 * i + 1.0) / (2.0 * n));
            sum += std::exp(r * (c - 1.0)) * (with_cos ? c : 1.0);
        }
        return sum / n;
    }
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double half = 0.5 * std::numbers::pi;
    for (int i = 0; i < n; ++i) {
        const double psi = half * (1.0 + rule.nodes[i]);
        const double c = std::cos(psi);
        double f = std::pow(std::sin(psi), N - 2) * std::exp(r * (c - 1.0));
        if (with_cos) f *= c;
        sum += rule.weights[i] * f;
    }
    return sum * half;
}

double phi_impl(int N, double r, bool derivative) {
    if (N < 1) throw std::domain_error("phi: N must be >= 1");
    if (r < 0.0) throw std::domain_error("phi: r must be nonnegative");
    if (N == 1) return derivative ? std::sinh(r) : std::cosh(r);
    int n = 16;
    double prev_num = spherical_mean(N, r, n, derivative);
    double prev_den = spherical_mean(N, 0.0, n, false);
    for (; n <= 16384; n *= 2) {
        const double num = spherical_mean(N, r, 2 * n, derivative);
        const double den = spherical_mean(N, 0.0, 2 * n, false);
        const double value = num / den;
        const double prev = prev_num / prev_den;
        if (std::abs(value - prev) <= kPhiTol * std::max(1.0, std::abs(value)))
            return std::exp(r) * value;
        prev_num = num;
        prev_den = den;
    }
    throw QuadratureError("phi: spherical mean did not converge");
}

}  // namespace

double sphere_area(int N) {
    if (N < 1) throw std::domain_error("sphere_area: N must be >= 1");
    if (N == 1) return 2.0;  // two endpoints of the unit interval boundary
    return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / gamma_fn(0.5 * N);
}

double phi(int N, double r) { return phi_impl(N, r, false); }

double phi_d1(int N, double r) { return phi_impl(N, r, true); }

Eigenfunction::Eigenfunction(int N, double lambda) : N_(N), lambda_(lambda) {
    if (N < 1) throw std::domain_error("Eigenfunction: N must be >= 1");
    if (!(lambda > 0.0))
        throw std::domain_error("Eigenfunction: lambda must be positive");
}

double Eigenfunction::value(double x_norm) const { return phi(N_, lambda_ * x_norm); }

double Eigenfunction::d1(double x_norm) const {
    return lambda_ * phi_d1(N_, lambda_ * x_norm);
}

double phi_envelope_constant(int N) {
    static std::mutex mu;
    static std::map<int, double> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double s = 50.0 * i / 400.0;
        const double env = std::pow(1.0 + s, -0.5 * (N - 1)) * std::exp(s);
        const double ratio = phi(N, s) / env;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    const double c = 1.05 * std::max(hi, 1.0 / lo);
    cache[N] = c;
    return c;
}

std::pair<double, double> Eigenfunction::envelope(double x_norm) const {
    const double s = lambda_ * x_norm;
    const double env = std::pow(1.0 + s, -0.5 * (N_ - 1)) * std::exp(s);
    const double c = phi_envelope_constant(N_);
    return {env / c, c * env};
}

double phi_norm_bound_r0(double lambda) { return std::max(4.0 / lambda, 4.0); }

namespace {

double phi_power_integral(int N, double theta, double lambda, double R) {
    return sphere_area(N) *
           adaptive_gk(
               [N, theta, lambda](double r) {
                   return std::pow(phi(N, lambda * r), theta) *
                          std::pow(r, N - 1);
               },
               0.0, R, 1e-12, 1e-10, 8000);
}

double phi_norm_bound_shape(int N, double theta, double lambda, double R) {
    return std::pow(lambda, -0.5 * (N - 1) * theta - 1.0) *
           std::pow(1.0 + R, (N - 1) * (1.0 - 0.5 * theta)) *
           std::exp(lambda * theta * R);
}

double phi_norm_bound_constant(int N, double theta) {
    static std::mutex mu;
    static std::map<std::pair<int, double>, double> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(N, theta);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double c = 0.0;
    for (double lambda : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const double r0 = phi_norm_bound_r0(lambda);
        for (double R : {r0, 1.5 * r0, 2.0 * r0, 4.0 * r0, 60.0}) {
            if (R < r0) continue;
            const double ratio = phi_power_integral(N, theta, lambda, R) /
                                 phi_norm_bound_shape(N, theta, lambda, R);
            c = std::max(c, ratio);
        }
    }
    c *= 1.05;
    cache[key] = c;
    return c;
}

}  // namespace

std::pair<double, double> phi_power_norm_bound(int N, double theta, double lambda,
                                               double R) {
    if (!(theta > 1.0))
        throw std::domain_error("phi_power_norm_bound: theta must exceed 1");
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::domain_error("phi_power_norm_bound: lambda must lie in (0,1)");
    if (R < phi_norm_bound_r0(lambda))
        throw std::domain_error("phi_power_norm_bound: R below the admissible floor");
    const double lhs = phi_power_integral(N, theta, lambda, R);
    const double rhs = phi_norm_bound_constant(N, theta) *
                       phi_norm_bound_shape(N, theta, lambda, R);
    return {lhs, rhs};
}

std::vector<double> apply_radial_laplacian(std::span<const double> field,
                                           const RadialStencil& stencil, int N,
                                           Exec exec) {
    if (static_cast<int>(field.size()) != stencil.n)
        throw std::invalid_argument("apply_radial_laplacian: field/stencil mismatch");
    std::vector<double> out(field.size());
    radial_laplacian(field, out, stencil.dr, N, exec);
    return out;
}

}  // namespace tricomi
