#include "tricomi/ode_solution.hpp"

#include <cmath>
#include <stdexcept>

namespace tricomi {

double c0_constant(double m) {
    if (m < 0.0) throw std::domain_error("c0_constant: m must be nonnegative");
    const double g = 0.5 * (m + 2.0);
    const double nu = 0.5 / g;
    return std::pow(g, -nu) * std::pow(2.0, 1.0 - nu) / gamma_fn(nu);
}

double c0_prime(double m) {
    if (m < 0.0) throw std::domain_error("c0_prime: m must be nonnegative");
    const double g = 0.5 * (m + 2.0);
    const double nu = 0.5 / g;
    return c0_constant(m) * std::pow(2.0, -nu) * gamma_fn(1.0 - nu) *
           std::pow(g, 1.0 - nu);
}

OdeSolution::OdeSolution(double m, double lambda, BesselEvalConfig cfg)
    : m_(m), lambda_(lambda), bessel_(cfg) {
    if (m < 0.0) throw std::domain_error("OdeSolution: m must be nonnegative");
    if (!(lambda > 0.0)) throw std::domain_error("OdeSolution: lambda must be positive");
    gamma_ = 0.5 * (m + 2.0);
    nu_ = 0.5 / gamma_;
    c0_ = c0_constant(m);
    lambda_root_ = std::pow(lambda, 1.0 / gamma_);
}

double OdeSolution::value(double t) const {
    if (t < 0.0) throw std::domain_error("OdeSolution::value: t must be nonnegative");
    if (t == 0.0) return 1.0;
    const double s = lambda_root_ * t;
    const double tau = std::pow(s, gamma_) / gamma_;
    // y = C0 s^{1/2} K_nu(tau) and s^{1/2} = (g tau)^nu, so the scaled form
    // stays finite through tau -> 0.
    return c0_ * std::pow(gamma_, nu_) * scaled_bessel_k(nu_, tau, bessel_);
}

double OdeSolution::derivative(double t) const {
    if (t < 0.0)
        throw std::domain_error("OdeSolution::derivative: t must be nonnegative");
    if (t == 0.0) return -c0_prime(m_) * lambda_root_;
    const double s = lambda_root_ * t;
    const double tau = std::pow(s, gamma_) / gamma_;
    // y' = -C0 l^{1/g} s^{g-1/2} K_{1-nu}(tau), s^{g-1/2} = (g tau)^{1-nu}
    return -c0_ * lambda_root_ * std::pow(gamma_, 1.0 - nu_) *
           scaled_bessel_k(1.0 - nu_, tau, bessel_);
}

AsymptoticsReport check_y_asymptotics(const OdeSolution& y,
                                      std::span<const double> t_grid, double T0) {
    if (t_grid.empty())
        throw std::invalid_argument("check_y_asymptotics: empty grid");
    AsymptoticsReport rep;
    rep.value_monotone = true;
    rep.deriv_monotone = true;
    const double g = y.gamma();
    const double lr = std::pow(y.lambda(), 1.0 / g);
    double prev_y = 0.0, prev_dy = 0.0;
    bool first = true;
    for (double t : t_grid) {
        const double yv = y.value(t);
        const double dy = y.derivative(t);
        if (!first) {
            if (!(yv < prev_y)) rep.value_monotone = false;
            if (!(-dy < -prev_dy)) rep.deriv_monotone = false;
        }
        prev_y = yv;
        prev_dy = dy;
        first = false;

        const double s = lr * t;
        if (y.lambda() * std::pow(t, g) >= T0) {
            const double env = std::pow(s, -0.25 * y.m()) *
                               std::exp(-std::pow(s, g) / g);
            const double ratio = yv / env;
            if (rep.n_value == 0) {
                rep.ratio_value_min = rep.ratio_value_max = ratio;
            } else {
                rep.ratio_value_min = std::min(rep.ratio_value_min, ratio);
                rep.ratio_value_max = std::max(rep.ratio_value_max, ratio);
            }
            ++rep.n_value;
        }
        if (s >= 1.0) {
            const double ratio = std::abs(dy) /
                                 (std::pow(t, 0.5 * y.m()) * y.lambda() * yv);
            if (rep.n_deriv == 0) {
                rep.ratio_deriv_min = rep.ratio_deriv_max = ratio;
            } else {
                rep.ratio_deriv_min = std::min(rep.ratio_deriv_min, ratio);
                rep.ratio_deriv_max = std::max(rep.ratio_deriv_max, ratio);
            }
            ++rep.n_deriv;
        }
    }
    if (rep.n_value > 0)
        rep.band_value =
            std::max(rep.ratio_value_max, 1.0 / rep.ratio_value_min);
    if (rep.n_deriv > 0)
        rep.band_deriv =
            std::max(rep.ratio_deriv_max, 1.0 / rep.ratio_deriv_min);
    return rep;
}

}  // namespace tricomi
