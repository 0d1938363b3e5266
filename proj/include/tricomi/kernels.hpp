#pragma once

#include <span>

namespace tricomi {

// Every grid kernel carries a serial reference path next to the OpenMP one;
// the two must produce bitwise-identical output (no reordered reductions).
enum class Exec { Serial, Parallel };

// Discrete radial Laplacian u'' + (N-1)/r u' on the uniform grid r_j = j dr.
// r = 0 uses the regularity limit N u''(0) with an even ghost; the outer
// boundary uses a homogeneous Dirichlet ghost.
void radial_laplacian(std::span<const double> u, std::span<double> out,
                      double dr, int N, Exec exec);

// Variable-step central second-order update:
//   next = u + (u - prev) * (h_new/h_old) + 0.5 h_new (h_new + h_old) * acc
// with acc = coef * lap + src.
void leapfrog_update(std::span<double> next, std::span<const double> u,
                     std::span<const double> prev, std::span<const double> lap,
                     std::span<const double> src, double coef, double h_new,
                     double h_old, Exec exec);

// |sigma|^power with fast paths for the small integer powers the sweeps use.
double pow_abs(double x, double power);

// Power-law source src[i] = amp * |field[i]|^power.
void power_source(std::span<const double> field, std::span<double> src,
                  double amp, double power, Exec exec);

// max_i max(|a[i]|, |b[i]|); also reports the index set membership
// (component 0 if the max came from a, else 1).
struct MaxAmplitude {
    double value = 0.0;
    int component = 0;
};
MaxAmplitude max_amplitude(std::span<const double> a, std::span<const double> b,
                           Exec exec);

}  // namespace tricomi
