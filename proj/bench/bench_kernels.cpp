// Timing comparison of the OpenMP kernels against their serial reference
// paths, plus one end-to-end solver run each way.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tricomi/kernels.hpp"
#include "tricomi/simulator.hpp"
#include "tricomi/test_solutions.hpp"

using namespace tricomi;
using clock_type = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& body, int reps) {
    const auto start = clock_type::now();
    for (int i = 0; i < reps; ++i) body();
    const auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-24s serial %9.3f ms   parallel %9.3f ms   speedup %.2fx\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif

    const int n = 1 << 21;
    const double dr = 1e-3;
    std::vector<double> u(n), prev(n), lap(n), src(n), next(n);
    for (int j = 0; j < n; ++j) {
        u[j] = std::exp(-1e-6 * j) * std::cos(1e-3 * j);
        prev[j] = u[j] * 0.999;
    }

    report("radial_laplacian",
           time_ms([&] { radial_laplacian(u, lap, dr, 3, Exec::Serial); }, 20),
           time_ms([&] { radial_laplacian(u, lap, dr, 3, Exec::Parallel); }, 20));

    report("power_source",
           time_ms([&] { power_source(u, src, 1.0, 2.5, Exec::Serial); }, 20),
           time_ms([&] { power_source(u, src, 1.0, 2.5, Exec::Parallel); }, 20));

    report("leapfrog_update",
           time_ms([&] { leapfrog_update(next, u, prev, lap, src, 2.0, 1e-3,
                                         1e-3, Exec::Serial); }, 20),
           time_ms([&] { leapfrog_update(next, u, prev, lap, src, 2.0, 1e-3,
                                         1e-3, Exec::Parallel); }, 20));

    report("max_amplitude",
           time_ms([&] { (void)max_amplitude(u, prev, Exec::Serial); }, 20),
           time_ms([&] { (void)max_amplitude(u, prev, Exec::Parallel); }, 20));

    {
        IntegratedSolution W(3, 1.0, 0.8);
        std::vector<double> rg, tg;
        for (int i = 0; i < 400; ++i) rg.push_back(0.02 * i);
        for (int i = 0; i < 64; ++i) tg.push_back(0.1 + 0.2 * i);
        report("W tensor grid",
               time_ms([&] { WGridEvaluator ev(W, rg, tg, Exec::Serial); }, 1),
               time_ms([&] { WGridEvaluator ev(W, rg, tg, Exec::Parallel); }, 1));
    }

    {
        ProblemConfig cfg;
        cfg.expo = {3, 1.0, 0.0, 2.0, 2.0};
        cfg.epsilon = 0.5;
        GridSpec serial_grid;
        serial_grid.dr = 0.002;
        serial_grid.exec = Exec::Serial;
        GridSpec parallel_grid = serial_grid;
        parallel_grid.exec = Exec::Parallel;
        auto run = [&](const GridSpec& g) {
            TricomiSolver solver(cfg, g, 2.0);
            while (solver.time() < 2.0 * (1 - 1e-12)) solver.step();
        };
        report("solver run (n~3k)",
               time_ms([&] { run(serial_grid); }, 1),
               time_ms([&] { run(parallel_grid); }, 1));
    }
    return 0;
}
