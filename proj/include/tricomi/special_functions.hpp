#pragma once

#include <stdexcept>

namespace tricomi {

// Evaluation policy for the K_nu quadrature. The integrand decays like
// exp(-t*cosh z); integration is truncated where the tail is below
// abs_tol*e^{-tail_margin} relative to the peak and refined adaptively.
struct BesselEvalConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    double tail_margin = 40.0;
};

// Gamma function by adaptive quadrature of the defining integral, with the
// recurrence used to lift small arguments out of the endpoint-singular range.
double gamma_fn(double s);

// Modified Bessel function of the second kind, nu in (0, 1], t > 0, from the
// integral representation int_0^inf exp(-t cosh z) cosh(nu z) dz.
double bessel_k(double nu, double t, const BesselEvalConfig& cfg = {});

// tau^mu * K_mu(tau) for mu in (0, 1); finite and nonzero down to tau -> 0,
// where it tends to 2^{mu-1} Gamma(mu). Small tau uses the ascending series.
double scaled_bessel_k(double mu, double tau, const BesselEvalConfig& cfg = {});

}  // namespace tricomi
