#include "tricomi/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tricomi {

namespace {

// below this many points the fork/join cost exceeds the gain; run serially
constexpr long kParallelGrain = 16384;

inline bool go_parallel(Exec exec, long n) {
    return exec == Exec::Parallel && n >= kParallelGrain;
}

inline double lap_point(const double* u, long j, long n, double inv_dr2,
                        double dr, int N) {
    if (j == 0) return 2.0 * N * (u[1] - u[0]) * inv_dr2;
    const double up = (j + 1 < n) ? u[j + 1] : 0.0;  // Dirichlet ghost
    const double um = u[j - 1];
    const double r = j * dr;
    return (up - 2.0 * u[j] + um) * inv_dr2 +
           (N - 1) * (up - um) / (2.0 * dr * r);
}

}  // namespace

void radial_laplacian(std::span<const double> u, std::span<double> out,
                      double dr, int N, Exec exec) {
    const long n = static_cast<long>(u.size());
    if (n < 3) throw std::invalid_argument("radial_laplacian: field too short");
    if (out.size() != u.size())
        throw std::invalid_argument("radial_laplacian: size mismatch");
    const double inv_dr2 = 1.0 / (dr * dr);
    const double* up = u.data();
    double* op = out.data();
    if (go_parallel(exec, n)) {
#pragma omp parallel for schedule(static)
        for (long j = 0; j < n; ++j) op[j] = lap_point(up, j, n, inv_dr2, dr, N);
    } else {
        for (long j = 0; j < n; ++j) op[j] = lap_point(up, j, n, inv_dr2, dr, N);
    }
}

void leapfrog_update(std::span<double> next, std::span<const double> u,
                     std::span<const double> prev, std::span<const double> lap,
                     std::span<const double> src, double coef, double h_new,
                     double h_old, Exec exec) {
    const long n = static_cast<long>(u.size());
    const double ratio = h_new / h_old;
    const double c2 = 0.5 * h_new * (h_new + h_old);
    double* np = next.data();
    const double* up = u.data();
    const double* pp = prev.data();
    const double* lp = lap.data();
    const double* sp = src.data();
    if (go_parallel(exec, n)) {
#pragma omp parallel for schedule(static)
        for (long j = 0; j < n; ++j)
            np[j] = up[j] + (up[j] - pp[j]) * ratio + c2 * (coef * lp[j] + sp[j]);
    } else {
        for (long j = 0; j < n; ++j)
            np[j] = up[j] + (up[j] - pp[j]) * ratio + c2 * (coef * lp[j] + sp[j]);
    }
}

double pow_abs(double x, double power) {
    const double a = std::abs(x);
    if (power == 2.0) return a * a;
    if (power == 3.0) return a * a * a;
    if (power == 1.0) return a;
    return std::pow(a, power);
}

void power_source(std::span<const double> field, std::span<double> src,
                  double amp, double power, Exec exec) {
    const long n = static_cast<long>(field.size());
    const double* fp = field.data();
    double* sp = src.data();
    if (amp == 0.0) {
        std::fill(src.begin(), src.end(), 0.0);
        return;
    }
    if (go_parallel(exec, n)) {
#pragma omp parallel for schedule(static)
        for (long j = 0; j < n; ++j) sp[j] = amp * pow_abs(fp[j], power);
    } else {
        for (long j = 0; j < n; ++j) sp[j] = amp * pow_abs(fp[j], power);
    }
}

MaxAmplitude max_amplitude(std::span<const double> a, std::span<const double> b,
                           Exec exec) {
    const long n = static_cast<long>(a.size());
    const double* ap = a.data();
    const double* bp = b.data();
    double ma = 0.0, mb = 0.0;
    if (go_parallel(exec, n)) {
#pragma omp parallel for schedule(static) reduction(max : ma, mb)
        for (long j = 0; j < n; ++j) {
            ma = std::max(ma, std::abs(ap[j]));
            mb = std::max(mb, std::abs(bp[j]));
        }
    } else {
        for (long j = 0; j < n; ++j) {
            ma = std::max(ma, std::abs(ap[j]));
            mb = std::max(mb, std::abs(bp[j]));
        }
    }
    MaxAmplitude m;
    if (mb > ma) {
        m.value = mb;
        m.component = 1;
    } else {
        m.value = ma;
        m.component = 0;
    }
    return m;
}

}  // namespace tricomi
