#include "tricomi/special_functions.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_map>

#include "tricomi/quadrature.hpp"

namespace tricomi {

namespace {

constexpr double kSeriesCrossover = 1e-4;  // switch K_nu to the ascending series
constexpr double kSeriesNuMax = 0.95;      // series unusable near integer order

double gamma_integral(double s) {
    // s >= 1.5 here, integrand z^{s-1} e^{-z} smooth on [0, Z]
    const double z_max = 2.0 * s + 100.0;
    return adaptive_gk([s](double z) { return std::pow(z, s - 1.0) * std::exp(-z); },
                       0.0, z_max, 1e-300, 2e-13);
}

double bessel_k_quadrature(double nu, double t, const BesselEvalConfig& cfg) {
    const double reach = (std::log(1.0 / cfg.abs_tol) + cfg.tail_margin) / t;
    const double z_max = std::acosh(std::max(2.0, reach));
    // the result scales like e^{-t}; an unscaled absolute tolerance would
    // swallow the whole integral for large t
    const double abs_tol = cfg.abs_tol * std::exp(-std::min(t, 700.0));
    return adaptive_gk(
        [nu, t](double z) { return std::exp(-t * std::cosh(z)) * std::cosh(nu * z); },
        0.0, z_max, abs_tol, cfg.rel_tol);
}

// Ascending series of tau^mu K_mu(tau), valid for non-integer mu and small tau:
//   tau^mu K_mu = pi/(2 sin pi mu) * [ 2^mu sum_k q^k/(k! Gamma(k+1-mu))
//                                    - 2^-mu tau^{2mu} sum_k q^k/(k! Gamma(k+1+mu)) ]
// with q = tau^2/4. Three terms leave a relative error O(q^3).
double scaled_k_series(double mu, double tau) {
    const double q = 0.25 * tau * tau;
    double sum_lo = 0.0, sum_hi = 0.0, qk = 1.0, kfact = 1.0;
    for (int k = 0; k <= 2; ++k) {
        if (k > 0) {
            qk *= q;
            kfact *= k;
        }
        sum_lo += qk / (kfact * gamma_fn(k + 1.0 - mu));
        sum_hi += qk / (kfact * gamma_fn(k + 1.0 + mu));
    }
    const double pref = std::numbers::pi / (2.0 * std::sin(std::numbers::pi * mu));
    return pref * (std::pow(2.0, mu) * sum_lo -
                   std::pow(2.0, -mu) * std::pow(tau, 2.0 * mu) * sum_hi);
}

}  // namespace

double gamma_fn(double s) {
    if (!(s > 0.0)) throw std::domain_error("gamma_fn: s must be positive");
    thread_local std::unordered_map<double, double> memo;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    double lift = 1.0;
    double z = s;
    while (z < 1.5) {
        lift *= z;
        z += 1.0;
    }
    const double value = gamma_integral(z) / lift;
    memo.emplace(s, value);
    return value;
}

double bessel_k(double nu, double t, const BesselEvalConfig& cfg) {
    if (!(nu > 0.0) || nu > 1.0)
        throw std::domain_error("bessel_k: order must lie in (0, 1]");
    if (!(t > 0.0)) throw std::domain_error("bessel_k: argument must be positive");
    if (t < kSeriesCrossover && nu <= kSeriesNuMax)
        return scaled_k_series(nu, t) / std::pow(t, nu);
    return bessel_k_quadrature(nu, t, cfg);
}

double scaled_bessel_k(double mu, double tau, const BesselEvalConfig& cfg) {
    if (!(mu > 0.0) || mu >= 1.0)
        throw std::domain_error("scaled_bessel_k: order must lie in (0, 1)");
    if (tau < 0.0) throw std::domain_error("scaled_bessel_k: negative argument");
    if (tau == 0.0) return std::pow(2.0, mu - 1.0) * gamma_fn(mu);
    if (tau < kSeriesCrossover) {
        if (mu <= kSeriesNuMax) return scaled_k_series(mu, tau);
        if (tau < 1e-30) return std::pow(2.0, mu - 1.0) * gamma_fn(mu);
    }
    return std::pow(tau, mu) * bessel_k_quadrature(mu, tau, cfg);
}

}  // namespace tricomi
