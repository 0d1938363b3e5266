// Acceptance suite: one criterion per function, one pass/fail line each.
// Every tolerance is pinned here; the suite exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tricomi/eigenfunctions.hpp"
#include "tricomi/exponents.hpp"
#include "tricomi/lifespan.hpp"
#include "tricomi/ode_solution.hpp"
#include "tricomi/simulator.hpp"
#include "tricomi/special_functions.hpp"
#include "tricomi/test_solutions.hpp"

using namespace tricomi;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " !" << what;
        }
    }
};

// ---------------------------------------------------------------- criterion 1
Outcome bessel_anchor() {
    Outcome out;
    double worst = 0.0;
    for (double t : {0.05, 0.5, 1.0, 5.0, 50.0}) {
        const double exact = oracles::bessel_k_half(t);
        worst = std::max(worst, std::abs(bessel_k(0.5, t) - exact) / exact);
    }
    out.detail << "max rel dev " << worst;
    out.require(worst < 1e-8, "half-order anchor above 1e-8");
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome ode_anchor() {
    Outcome out;
    double worst = 0.0;
    for (double lambda : {0.1, 1.0, 5.0}) {
        OdeSolution y(0.0, lambda);
        for (double t = 0.0; t <= 10.0; t += 0.1)
            worst = std::max(worst, std::abs(y.value(t) - std::exp(-lambda * t)));
    }
    out.detail << "m=0 max dev " << worst;
    out.require(worst < 1e-8, "m=0 exponential anchor");
    for (double m : {1.0, 2.0}) {
        OdeSolution y(m, 1.0);
        std::vector<double> worsts;
        for (double h : {0.02, 0.01, 0.005}) {
            double w = 0.0;
            for (double t = 0.5; t <= 5.0; t += 0.28125) {
                const double resid =
                    (y.value(t + h) - 2.0 * y.value(t) + y.value(t - h)) / (h * h) -
                    std::pow(t, m) * y.value(t);
                w = std::max(w, std::abs(resid));
            }
            worsts.push_back(w);
        }
        const double order = std::log2(worsts[1] / worsts[2]);
        out.detail << "; m=" << m << " order " << order;
        out.require(std::abs(order - 2.0) <= 0.3, "ODE residual order outside 2.0+-0.3");
    }
    return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome eigen_identity() {
    Outcome out;
    for (int N : {1, 2, 3, 4}) {
        Eigenfunction ph(N, 1.0);
        std::vector<double> errs;
        for (double dr : {0.04, 0.02, 0.01}) {
            RadialStencil st{dr, static_cast<int>(std::round(4.0 / dr)) + 1};
            std::vector<double> f(st.n);
            for (int j = 0; j < st.n; ++j) f[j] = ph.value(st.r(j));
            const auto lap = apply_radial_laplacian(f, st, N);
            double worst = 0.0;
            for (int j = 0; j + 1 < st.n; ++j)
                worst = std::max(worst, std::abs(lap[j] - f[j]) / f[j]);
            errs.push_back(worst);
        }
        const double order = std::log2(errs[1] / errs[2]);
        out.detail << "N=" << N << " order " << order << "; ";
        out.require(std::abs(order - 2.0) <= 0.3, "identity order outside 2.0+-0.3");
    }
    double worst = 0.0;
    for (double r = 0.1; r <= 30.0; r += 0.31)
        worst = std::max(worst, std::abs(phi(3, r) - std::sinh(r) / r) /
                                    (std::sinh(r) / r));
    out.detail << "N=3 closed-form dev " << worst;
    out.require(worst < 1e-10, "sinh(r)/r anchor above 1e-10");
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome free_residuals() {
    Outcome out;
    struct Fixture {
        const char* name;
        std::function<double(double, double)> field;
        double m;
        int N;
    };
    SpecialSolution w1(3, 1.0, 1.0);
    SpecialSolution w2(2, 2.0, 0.7);
    IntegratedSolution W1(3, 1.0, 1.0);
    IntegratedSolution W2(2, 0.5, 0.8);
    std::vector<Fixture> fixtures{
        {"w(m=1,l=1,N=3)", [&](double r, double t) { return w1.value(r, t); }, 1.0, 3},
        {"w(m=2,l=0.7,N=2)", [&](double r, double t) { return w2.value(r, t); }, 2.0, 2},
        {"W(m=1,b=1,N=3)", [&](double r, double t) { return W1.value(r, t); }, 1.0, 3},
        {"W(m=0.5,b=0.8,N=2)", [&](double r, double t) { return W2.value(r, t); }, 0.5, 2},
    };
    for (const auto& fx : fixtures) {
        const auto rep = free_residual(fx.field, fx.m, fx.N, 1.6, 0.8, 1.4, 0.04, 3);
        out.detail << fx.name << " order " << rep.order << "; ";
        out.require(std::abs(rep.order - 2.0) <= 0.3,
                    std::string(fx.name) + " order outside 2.0+-0.3");
    }
    return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome estimate_suite() {
    Outcome out;
    // incomplete-gamma anchors (m = 0, origin)
    {
        const double beta = 1.5, t = 2.0;
        IntegratedSolution W(3, 0.0, beta);
        const double exact = std::pow(t, -beta) * oracles::gamma_lower(beta, t);
        const double dev = std::abs(W.value(0.0, t) - exact) / exact;
        const double dexact =
            -std::pow(t, -beta - 1.0) * oracles::gamma_lower(beta + 1.0, t);
        const double ddev = std::abs(W.dt(0.0, t) - dexact) / std::abs(dexact);
        out.detail << "gamma anchors dev " << std::max(dev, ddev);
        out.require(dev < 1e-8, "W incomplete-gamma anchor");
        out.require(ddev < 1e-8, "dW incomplete-gamma anchor");
    }
    struct LowerFixture {
        int N;
        double m, beta;
    };
    for (const auto& fx :
         {LowerFixture{3, 1.0, 2.0 / 3.0}, LowerFixture{2, 0.0, 1.2},
          LowerFixture{3, 2.0, 1.0}}) {
        IntegratedSolution W(fx.N, fx.m, fx.beta);
        std::vector<double> grid;
        const double gate = std::pow(4.0, 1.0 / W.gamma());
        for (int i = 0; i <= 10; ++i) grid.push_back(gate * 1.2 + i * 2.0);
        const auto rep = check_W_lower(W, grid);
        out.detail << "; lower(" << fx.N << "," << fx.m << "," << fx.beta << ") "
                   << rep.stat << " drift " << rep.drift;
        out.require(rep.pass, "lower-bound constant unstable");
    }
    {
        ConeLattice lat;
        lat.t_max = 18.0;
        IntegratedSolution Wa(3, 1.0, 2.0);
        const auto ra = check_W_upper_interior(Wa, lat);
        out.detail << "; upper_int sup " << ra.stat << " drift " << ra.drift;
        out.require(ra.pass, "interior upper bound unstable");
        IntegratedSolution Wb(2, 0.0, 1.5);
        const auto rb = check_W_upper_interior(Wb, lat);
        out.require(rb.pass, "interior upper bound unstable (N=2)");
        IntegratedSolution Wc(3, 1.0, 0.5);
        const auto rc = check_W_upper_alt(Wc, lat);
        out.detail << "; upper_alt sup " << rc.stat << " drift " << rc.drift;
        out.require(rc.pass, "alternative upper bound unstable");
        IntegratedSolution Wd(2, 0.0, 0.3);
        const auto rd = check_W_upper_alt(Wd, lat);
        out.require(rd.pass, "alternative upper bound unstable (N=2)");
        IntegratedSolution We(3, 1.0, 2.0 / 3.0);
        const auto re = check_dW_bound(We, lat);
        out.detail << "; dW sup " << re.stat << " drift " << re.drift;
        out.require(re.pass, "derivative bound unstable");
        IntegratedSolution Wf(2, 0.0, 1.0);
        const auto rf = check_dW_bound(Wf, lat);
        out.require(rf.pass, "derivative bound unstable (N=2)");
    }
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome curve_algebra() {
    Outcome out;
    double worst_root = 0.0;
    for (int N = 2; N <= 6; ++N)
        for (double m : {0.0, 1.0, 2.0, 3.0}) {
            double lo = 1.0 + 1e-9, hi = 60.0;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (f_ss(N, m, mid, mid) > 0.0 ? lo : hi) = mid;
            }
            worst_root = std::max(worst_root,
                                  std::abs(0.5 * (lo + hi) - rho_strauss(N, m)));
        }
    out.detail << "diagonal-root dev " << worst_root;
    out.require(worst_root < 1e-8, "diagonal root off rho_strauss");

    double worst_id = 0.0;
    int lattice = 0;
    for (int N : {1, 2, 3, 4})
        for (double m : {0.0, 0.5, 1.0, 2.0, 3.0})
            for (double p : {1.2, 1.7, 2.0, 3.0, 6.0})
                for (double q : {1.3, 2.0, 2.5, 4.0, 8.0}) {
                    const double lhs = -f_gg(N, m, q, p) / q + gamma_l(N, m, q);
                    worst_id = std::max(worst_id, std::abs(lhs + f_ss(N, m, p, q)));
                    ++lattice;
                }
    out.detail << "; gamma_l identity dev " << worst_id << " on " << lattice
               << " points";
    out.require(lattice >= 100, "lattice too small");
    out.require(worst_id < 1e-12, "gamma_l identity above 1e-12");

    bool exact = true;
    for (double p : {1.5, 2.0, 4.0})
        for (double q : {1.2, 3.0, 9.0}) {
            exact = exact && gamma_ss(3, 1.0, p, q) == gamma_ss(3, 1.0, q, p);
            exact = exact && gamma_gg(3, 1.0, p, q) == gamma_gg(3, 1.0, q, p);
            ExponentConfig a{3, 2.0, 0.5, p, q};
            ExponentConfig b{3, 0.5, 2.0, q, p};
            exact = exact && omega_ss(a) == omega_ss(b);
        }
    out.require(exact, "swap/branch symmetry not exact");
    return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome simulator_oracle() {
    Outcome out;
    // L-infinity convergence against the exact special solution, m = 1
    SpecialSolution w(3, 1.0, 1.0);
    std::vector<double> errs;
    std::vector<std::shared_ptr<History>> histories;
    for (double dr : {0.04, 0.02, 0.01}) {
        ProblemConfig cfg;
        cfg.expo = {3, 1.0, 1.0, 2.0, 2.0};
        cfg.epsilon = 1.0;
        cfg.a = 0.0;
        cfg.b = 0.0;
        GridSpec grid;
        grid.dr = dr;
        grid.domain_radius = 8.0;
        grid.snapshot_stride = 64;
        grid.speed_floor = 1.0;  // true speed t^{1/2} <= 0.71 here: constant dt
        TricomiSolver solver(cfg, grid, 0.5);
        solver.init_from_special(w, 5.0, 1.5);
        while (solver.time() < 0.5 * (1 - 1e-12)) solver.step();
        double err = 0.0;
        for (int j = 0; j < solver.stencil().n; ++j) {
            const double r = solver.stencil().r(j);
            if (r > 4.0) break;
            err = std::max(err,
                           std::abs(solver.u()[j] - w.value(r, solver.time())));
        }
        errs.push_back(err);
        histories.push_back(solver.history());
    }
    const double order = std::log2(errs[1] / errs[2]);
    out.detail << "L-inf errs " << errs[0] << "/" << errs[1] << "/" << errs[2]
               << " order " << order;
    out.require(std::abs(order - 2.0) <= 0.3, "oracle order outside 2.0+-0.3");

    // m = 0 energy drift below 0.1%
    {
        ProblemConfig cfg;
        cfg.expo = {1, 0.0, 0.0, 2.0, 2.0};
        cfg.epsilon = 1.0;
        cfg.a = 0.0;
        cfg.b = 0.0;
        GridSpec grid;
        grid.dr = 0.003;
        grid.c_cfl = 0.45;
        grid.domain_radius = 4.0;
        grid.snapshot_stride = 50;
        TricomiSolver solver(cfg, grid, 2.0);
        while (solver.time() < 2.0 * (1 - 1e-12)) solver.step();
        const auto& snaps = solver.history()->snaps;
        auto energy = [&](const Snapshot& s) {
            double e = 0.0;
            for (int j = 0; j < solver.stencil().n; ++j) {
                const int jm = j == 0 ? 1 : j - 1;
                const double up = j + 1 < solver.stencil().n ? s.u[j + 1] : 0.0;
                const double ux = (up - s.u[jm]) / (2.0 * grid.dr);
                const double wj =
                    (j == 0 || j == solver.stencil().n - 1) ? 0.5 : 1.0;
                e += wj * (s.ut[j] * s.ut[j] + ux * ux) * grid.dr;
            }
            return e;
        };
        const double e0 = energy(snaps[1]);
        double drift = 0.0;
        for (std::size_t i = 1; i + 1 < snaps.size(); ++i)
            drift = std::max(drift, std::abs(energy(snaps[i]) - e0) / e0);
        out.detail << "; m=0 energy drift " << drift;
        out.require(drift < 1e-3, "energy drift above 0.1%");
        histories.push_back(solver.history());
    }
    // finite-propagation audit over every stored fixture run plus an m=2 run
    {
        ProblemConfig cfg;
        cfg.expo = {3, 2.0, 2.0, 2.0, 2.0};
        cfg.epsilon = 0.5;
        cfg.a = 0.0;
        cfg.b = 0.0;
        GridSpec grid;
        grid.dr = 0.02;
        grid.snapshot_stride = 20;
        TricomiSolver solver(cfg, grid, 2.0);
        while (solver.time() < 2.0 * (1 - 1e-12)) solver.step();
        histories.push_back(solver.history());
    }
    double worst_excess = 0.0;
    for (const auto& h : histories) {
        const auto rep = audit_finite_speed(*h);
        worst_excess = std::max(worst_excess, rep.worst_excess);
        out.require(rep.pass, "finite-propagation audit failed");
    }
    out.detail << "; worst support excess " << worst_excess << " cells";
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome scaling_experiment() {
    Outcome out;
    ProblemConfig cfg;
    cfg.expo = {1, 1.0, 0.0, 2.0, 2.0};
    GridSpec grid;
    grid.dr = 0.02;
    const std::vector<double> eps{8.0, 4.0, 2.0, 1.0, 0.5, 0.25};
    const RegimeReport rep = classify_regime(cfg.expo);
    out.require(rep.primary.kind == BoundKind::PowerLaw, "config not a power-law regime");
    out.detail << "Omega_GG " << rep.omega_gg << " bound exp " << rep.primary.exponent;

    std::vector<std::vector<LifespanRecord>> sweeps;
    for (double threshold : {1e6, 1e7, 1e8}) {
        sweeps.push_back(sweep_lifespan(cfg, eps, grid, 40.0, threshold));
        for (const auto& r : sweeps.back())
            out.require(r.blew_up, "missing blow-up at eps " + std::to_string(r.epsilon));
    }
    double worst_spread = 0.0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        double lo = 1e300, hi = 0.0;
        for (const auto& sw : sweeps) {
            lo = std::min(lo, sw[i].T_measured);
            hi = std::max(hi, sw[i].T_measured);
        }
        worst_spread = std::max(worst_spread, (hi - lo) / lo);
    }
    out.detail << "; threshold spread " << worst_spread;
    out.require(worst_spread < 0.05, "threshold spread above 5%");
    const auto& base = sweeps.front();
    for (std::size_t i = 0; i + 1 < base.size(); ++i)
        out.require(base[i].T_measured <= base[i + 1].T_measured,
                    "lifespans not monotone in eps");
    const FitResult fit = fit_power_law(base);
    const ComparisonResult cmp = compare_with_prediction(fit, rep, 0.25);
    out.detail << "; slope " << fit.slope << " verdict " << verdict_name(cmp.verdict);
    out.require(cmp.verdict == Verdict::Pass, "upper-bound verdict not PASS");
    return out;
}

// ---------------------------------------------------------------- criterion 9
Outcome weak_form_check() {
    Outcome out;
    SpecialSolution wbase(1, 1.0, 0.6);
    CompositeTestFunction F(wbase, CutoffConfig{1.8, 4.0, false},
                            SpatialCutoff{4.5, 1.0});
    std::vector<double> gaps;
    double box_gap = 0.0;
    for (double dr : {0.02, 0.01, 0.005}) {
        ProblemConfig cfg;
        cfg.expo = {1, 1.0, 0.0, 2.0, 2.0};
        cfg.epsilon = 0.3;
        GridSpec grid;
        grid.dr = dr;
        grid.snapshot_stride = 2;
        grid.domain_radius = 6.0;
        TricomiSolver solver(cfg, grid, 2.0);
        while (solver.time() < 2.0 * (1 - 1e-12)) solver.step();
        const auto res = weak_form_residual(*solver.history(), F, 1);
        gaps.push_back(std::abs(res.lhs - res.rhs) / std::abs(res.rhs));
        box_gap = std::abs(res.rhs_box - res.rhs) / std::abs(res.rhs);
        // one-sided inequality, within the discretization error of this level
        out.require(res.lhs <= res.rhs + 8.0 * gaps.front() * std::abs(res.rhs),
                    "one-sided inequality violated beyond discretization error");
        const auto res2 = weak_form_residual(*solver.history(), F, 2);
        out.require(std::abs(res2.lhs - res2.rhs) / std::abs(res2.rhs) < 5e-2,
                    "second identity out of tolerance");
    }
    const double order = std::log2(gaps[1] / gaps[2]);
    out.detail << "rel gaps " << gaps[0] << "/" << gaps[1] << "/" << gaps[2]
               << " order " << order << "; box-route gap " << box_gap;
    out.require(gaps[2] < gaps[0], "no decrease under refinement");
    out.require(order >= 1.5 && order <= 3.0, "gap order outside [1.5, 3]");
    out.require(box_gap < 5e-3, "box-route cross-check out of tolerance");
    return out;
}

// --------------------------------------------------------------- criterion 10
Outcome y_functional_check() {
    Outcome out;
    // synthetic monotone-mass field
    {
        std::vector<double> t, mass;
        for (int i = 0; i <= 400; ++i) {
            const double tt = 5.0 * i / 400.0;
            t.push_back(tt);
            mass.push_back(tt * tt * std::exp(0.3 * tt));
        }
        const std::vector<double> R{0.5, 1.0, 2.0, 3.0, 4.5};
        const auto rep = y_functional_from_mass(t, mass, 4.0, R, 1e-6);
        out.detail << "synthetic dev " << rep.max_derivative_dev << " excess "
                   << rep.max_domination_excess;
        out.require(rep.derivative_ok, "synthetic derivative identity above 1e-6");
        out.require(rep.domination_ok, "synthetic domination above 1e-6");
    }
    // real blow-up history
    {
        ProblemConfig cfg;
        cfg.expo = {1, 1.0, 0.0, 2.0, 2.0};
        cfg.epsilon = 2.0;
        GridSpec grid;
        grid.dr = 0.02;
        grid.snapshot_stride = 2;
        TricomiSolver solver(cfg, grid, 3.0);
        while (solver.time() < 3.0 * (1 - 1e-12)) solver.step();
        const auto h = solver.history();
        IntegratedSolution Wb(1, 1.0, 0.8);
        const std::vector<double> R{0.5, 1.0, 1.5, 2.0, 2.5, 2.9};
        const auto rep = y_functional(*h, Wb, 4.0, R);
        out.detail << "; history dev " << rep.max_derivative_dev << " excess "
                   << rep.max_domination_excess;
        out.require(rep.derivative_ok, "history derivative identity above 1e-6");
        out.require(rep.domination_ok, "history domination above 1e-6");
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "bessel half-order anchor", bessel_anchor},
        {2, "ODE solution anchors and residual order", ode_anchor},
        {3, "eigenfunction identity and closed form", eigen_identity},
        {4, "free-equation residual convergence", free_residuals},
        {5, "integrated-family estimate suite", estimate_suite},
        {6, "curve algebra", curve_algebra},
        {7, "simulator oracle", simulator_oracle},
        {8, "lifespan scaling experiment", scaling_experiment},
        {9, "weak-form identity", weak_form_check},
        {10, "Y-functional identities", y_functional_check},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail << " exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] %2d. %s (%.1fs): %s\n", out.pass ? "PASS" : "FAIL",
                    c.id, c.name, secs, out.detail.str().c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures > 0) std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    else std::printf("acceptance: all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
