#pragma once

#include <span>
#include <vector>

#include "tricomi/special_functions.hpp"

namespace tricomi {

// Normalization constant C0(m) making y(0+) = 1.
double c0_constant(double m);

// C0'(m) = -lim_{t->0+} y_1'(t) > 0, from the Bessel derivative recurrence
// evaluated through the small-argument limit of tau^mu K_mu(tau).
double c0_prime(double m);

// The decaying solution y_{lambda,m} of y'' = lambda^2 t^m y, normalized to
// y(0) = 1:  y(t) = C0 (lambda^{1/g} t)^{1/2} K_{1/(2g)}(g^{-1}(lambda^{1/g} t)^g)
// with g = (m+2)/2. Derivatives go through the recurrence
// d/dtau (tau^nu K_nu) = -tau^nu K_{nu-1}, never through differencing.
class OdeSolution {
  public:
    OdeSolution(double m, double lambda, BesselEvalConfig cfg = {});

    double m() const { return m_; }
    double lambda() const { return lambda_; }
    double gamma() const { return gamma_; }
    double nu() const { return nu_; }
    double c0() const { return c0_; }

    double value(double t) const;       // in (0, 1], equals 1 at t = 0
    double derivative(double t) const;  // negative for t > 0, -C0' lambda^{1/g} at 0

  private:
    double m_, lambda_, gamma_, nu_, c0_, lambda_root_;  // lambda^{1/gamma}
    BesselEvalConfig bessel_;
};

// Empirical check of the decay envelopes: on the admissible part of the grid
// the ratios y / [(l^{1/g}t)^{-m/4} exp(-g^{-1}(l^{1/g}t)^g)] and
// |y'| / [t^{m/2} l y] must stay inside a bounded band.
struct AsymptoticsReport {
    std::size_t n_value = 0;  // grid points admitted by lambda t^gamma >= T0
    std::size_t n_deriv = 0;  // grid points admitted by lambda^{1/g} t >= 1
    double ratio_value_min = 0.0, ratio_value_max = 0.0;
    double ratio_deriv_min = 0.0, ratio_deriv_max = 0.0;
    double band_value = 0.0;  // observed C: max(max, 1/min)
    double band_deriv = 0.0;
    bool value_monotone = false;  // y strictly decreasing along the grid
    bool deriv_monotone = false;  // -y' strictly decreasing along the grid
};

AsymptoticsReport check_y_asymptotics(const OdeSolution& y,
                                      std::span<const double> t_grid,
                                      double T0 = 2.0);

}  // namespace tricomi
