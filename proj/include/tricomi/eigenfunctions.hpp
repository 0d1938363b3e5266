#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tricomi/kernels.hpp"

namespace tricomi {

// Surface measure of the unit sphere in R^N.
double sphere_area(int N);

// The positive Laplace eigenfunction profile, normalized to phi(0) = 1:
//   N = 1: cosh r
//   N >= 2: c_N int_{-1}^{1} (1-s^2)^{(N-3)/2} e^{s r} ds
// evaluated through the s = cos(psi) substitution, which removes the N = 2
// endpoint singularity. Grows like r^{-(N-1)/2} e^r.
double phi(int N, double r);
double phi_d1(int N, double r);  // d/dr phi

// phi_lambda(x) = phi(lambda |x|); satisfies Delta phi_lambda = lambda^2 phi_lambda.
class Eigenfunction {
  public:
    Eigenfunction(int N, double lambda);
    int dim() const { return N_; }
    double lambda() const { return lambda_; }
    double value(double x_norm) const;
    double d1(double x_norm) const;  // radial derivative
    // (lower, upper) envelope C^{-1}(1+s)^{-(N-1)/2} e^s <= phi <= C (...)
    // with the module constant C calibrated once per dimension.
    std::pair<double, double> envelope(double x_norm) const;

  private:
    int N_;
    double lambda_;
};

// Calibrated envelope constant per dimension (cached).
double phi_envelope_constant(int N);

// Power-norm comparison against the calibrated envelope bound: (lhs, rhs) with
//   lhs = int_{|x|<R} phi_lambda^theta dx   (radial quadrature)
//   rhs = C lambda^{-(N-1)theta/2 - 1} (1+R)^{N-1-(N-1)theta/2} e^{lambda theta R}
// where C is calibrated once per (N, theta). R below the floor is rejected.
std::pair<double, double> phi_power_norm_bound(int N, double theta, double lambda,
                                               double R);

// Default admissibility floor R0 for the norm bound.
double phi_norm_bound_r0(double lambda);

// Uniform radial grid r_j = j dr, j = 0..n-1, origin included.
struct RadialStencil {
    double dr = 0.0;
    int n = 0;
    double r(int j) const { return j * dr; }
    double r_max() const { return (n - 1) * dr; }
};

// Second-order radial Laplacian of a field sampled on the stencil.
std::vector<double> apply_radial_laplacian(std::span<const double> field,
                                           const RadialStencil& stencil, int N,
                                           Exec exec = Exec::Parallel);

}  // namespace tricomi
