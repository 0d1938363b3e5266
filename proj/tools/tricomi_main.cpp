// Command-line surface: curve evaluation, region plots, special-solution
// checks, the built-in verification suite, single simulations, epsilon
// sweeps and scaling-law fits. Exit codes: 0 success/PASS, 1 FAIL, 2 usage.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tricomi/eigenfunctions.hpp"
#include "tricomi/exponents.hpp"
#include "tricomi/io.hpp"
#include "tricomi/lifespan.hpp"
#include "tricomi/ode_solution.hpp"
#include "tricomi/simulator.hpp"
#include "tricomi/special_functions.hpp"
#include "tricomi/test_solutions.hpp"

namespace {

using namespace tricomi;

struct CommonOpts {
    std::string config_path;
    RunConfig cfg;
};

void add_config_flags(CLI::App* cmd, CommonOpts& o, bool with_eps = true) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--N", o.cfg.problem.expo.N, "spatial dimension");
    cmd->add_option("--m1", o.cfg.problem.expo.m1, "diffusion strength m1");
    cmd->add_option("--m2", o.cfg.problem.expo.m2, "diffusion strength m2");
    cmd->add_option("--p", o.cfg.problem.expo.p, "exponent p");
    cmd->add_option("--q", o.cfg.problem.expo.q, "exponent q");
    if (with_eps)
        cmd->add_option("--eps", o.cfg.problem.epsilon, "data amplitude epsilon");
    cmd->add_option("--r0", o.cfg.problem.r0, "data support radius");
    cmd->add_option("--grid-dr", o.cfg.grid.dr, "radial spacing");
    cmd->add_option("--cfl", o.cfg.grid.c_cfl, "CFL number");
    cmd->add_option("--tmax", o.cfg.T_max, "time horizon");
    cmd->add_option("--threshold", o.cfg.threshold, "blow-up amplitude threshold");
}

// flag overrides must win over the config file, so reparse after loading
RunConfig resolve_config(const CommonOpts& o, CLI::App* cmd, bool with_eps = true) {
    RunConfig cfg;
    if (!o.config_path.empty()) cfg = read_config_json(o.config_path);
    auto maybe = [&](const char* name, auto& slot) {
        auto* opt = cmd->get_option_no_throw(name);
        if (opt && opt->count() > 0)
            slot = static_cast<std::decay_t<decltype(slot)>>(opt->as<double>());
    };
    if (cmd->get_option("--N")->count() > 0)
        cfg.problem.expo.N = cmd->get_option("--N")->as<int>();
    maybe("--m1", cfg.problem.expo.m1);
    maybe("--m2", cfg.problem.expo.m2);
    maybe("--p", cfg.problem.expo.p);
    maybe("--q", cfg.problem.expo.q);
    if (with_eps) maybe("--eps", cfg.problem.epsilon);
    maybe("--r0", cfg.problem.r0);
    maybe("--grid-dr", cfg.grid.dr);
    maybe("--cfl", cfg.grid.c_cfl);
    maybe("--tmax", cfg.T_max);
    maybe("--threshold", cfg.threshold);
    return cfg;
}

void print_bound(const LifespanBound& b) {
    switch (b.kind) {
        case BoundKind::PowerLaw:
            std::cout << "T <= A eps^-" << b.exponent << "  [" << b.curve << " = "
                      << b.curve_value << "]\n";
            break;
        case BoundKind::ExpPowerLaw:
            std::cout << "T <= exp(A eps^-" << b.exponent << ")  [" << b.curve
                      << " = " << b.curve_value << "]\n";
            break;
        case BoundKind::None:
            std::cout << "no lifespan bound applies\n";
            break;
    }
}

int cmd_curves(const RunConfig& rc) {
    const ExponentConfig& e = rc.problem.expo;
    e.validate();
    std::cout << std::setprecision(10);
    std::cout << "N=" << e.N << " m1=" << e.m1 << " m2=" << e.m2 << " p=" << e.p
              << " q=" << e.q << "\n";
    std::cout << "gamma(m1) = " << gamma_exponent(e.m1)
              << "  gamma(m2) = " << gamma_exponent(e.m2) << "\n";
    if (e.equal_speeds()) {
        std::cout << "Gamma_SS = " << gamma_ss(e.N, e.m1, e.p, e.q) << "\n";
        std::cout << "Gamma_GG = " << gamma_gg(e.N, e.m1, e.p, e.q) << "\n";
    } else {
        ExponentConfig c = e;
        std::cout << "Omega_SS = " << omega_ss(c) << "\n";
        std::cout << "Omega_GG = " << omega_gg(c) << "\n";
    }
    for (double m : {e.m1, e.m2}) {
        std::cout << "rho_strauss(N," << m << ") = ";
        try {
            std::cout << rho_strauss(e.N, m);
        } catch (const InfiniteExponent&) {
            std::cout << "inf";
        }
        std::cout << "  rho_conf = " << rho_conf(e.N, m) << "\n";
        if (e.equal_speeds()) break;
    }
    if (e.N >= 2) std::cout << "rho_glassey(N) = " << rho_glassey(e.N) << "\n";
    const RegimeReport rep = classify_regime(e);
    std::cout << "regime: " << regime_name(rep.regime) << "\n";
    for (const auto& b : rep.bounds) print_bound(b);
    std::cout << "primary: ";
    print_bound(rep.primary);
    return 0;
}

int cmd_region(const RunConfig& rc, const std::string& out, int n_cells) {
    const ExponentConfig& e = rc.problem.expo;
    const auto axis = log_axis(1.01, 10.0, n_cells);
    const CurveGrid grid = region_sample(e.N, e.m1, e.m2, axis, axis);
    export_region_plot(grid, e.N, e.m1, e.m2, out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_special(const RunConfig& rc, double lambda, double beta, double x,
                double t) {
    const ExponentConfig& e = rc.problem.expo;
    std::cout << std::setprecision(12);
    if (lambda > 0.0) {
        SpecialSolution w(e.N, e.m1, lambda);
        std::cout << "w_lambda(x,t)   = " << w.value(x, t) << "\n";
        std::cout << "dt w_lambda     = " << w.dt(x, t) << "\n";
        const auto res = free_residual(
            [&](double r, double tt) { return w.value(r, tt); }, e.m1, e.N,
            std::max(2.0, x), std::max(0.5, 0.5 * t), std::max(1.0, t), 0.02, 2);
        std::cout << "free-equation residual order ~ " << res.order << "\n";
    }
    if (beta > 0.0) {
        IntegratedSolution W(e.N, e.m1, beta);
        std::cout << "W_beta(x,t)     = " << W.value(x, t) << "\n";
        std::cout << "dt W_beta       = " << W.dt(x, t) << "\n";
        std::vector<double> ts;
        const double g = W.gamma();
        const double t_lo = std::pow(2.0 * 2.0, 1.0 / g) * 1.05;
        for (int i = 0; i <= 8; ++i) ts.push_back(t_lo + i * 2.0);
        const auto lower = check_W_lower(W, ts);
        std::cout << "W lower ratio   = " << lower.stat
                  << (lower.pass ? "  (stable)" : "  (UNSTABLE)") << "\n";
        ConeLattice lat;
        lat.r0 = rc.problem.r0;
        const double floor_beta = 0.5 * e.N - 1.0 / (e.m1 + 2.0);
        if (beta > floor_beta) {
            const auto upper = check_W_upper_interior(W, lat);
            std::cout << "W upper-int sup = " << upper.stat
                      << (upper.pass ? "  (stable)" : "  (UNSTABLE)") << "\n";
        }
        const auto dwb = check_dW_bound(W, lat);
        std::cout << "dW bound sup    = " << dwb.stat
                  << (dwb.pass ? "  (stable)" : "  (UNSTABLE)") << "\n";
    }
    return 0;
}

int check(bool ok, const std::string& name, int& failures) {
    std::cout << (ok ? "  ok    " : "  FAIL  ") << name << "\n";
    if (!ok) ++failures;
    return failures;
}

// compact invariant suite; the full suite lives in the test binaries
int cmd_verify() {
    int failures = 0;
    std::cout << "verify:\n";
    {
        const double v = bessel_k(0.5, 1.0);
        const double exact = std::sqrt(std::numbers::pi / 2.0) * std::exp(-1.0);
        check(std::abs(v - exact) / exact < 1e-9, "bessel_k half-order anchor",
              failures);
    }
    {
        OdeSolution y(0.0, 1.0);
        check(std::abs(y.value(1.0) - std::exp(-1.0)) < 1e-9,
              "y_lambda m=0 collapse", failures);
        check(y.value(0.0) == 1.0, "y_lambda normalization", failures);
    }
    {
        bool ok = true;
        for (int N = 2; N <= 6; ++N)
            for (double m : {0.0, 1.0, 2.0, 3.0}) {
                const double rho = rho_strauss(N, m);
                double lo = 1.0 + 1e-9, hi = 50.0;
                for (int i = 0; i < 200; ++i) {
                    const double mid = 0.5 * (lo + hi);
                    if (f_ss(N, m, mid, mid) > 0.0)
                        lo = mid;
                    else
                        hi = mid;
                }
                ok = ok && std::abs(0.5 * (lo + hi) - rho) < 1e-7;
            }
        check(ok, "diagonal f_ss root equals rho_strauss", failures);
    }
    {
        bool ok = true;
        for (double m : {0.0, 1.0, 2.0})
            for (double p : {1.5, 2.0, 3.0})
                for (double q : {1.5, 2.0, 3.0})
                    for (int N : {1, 2, 3}) {
                        const double lhsv = -f_gg(N, m, q, p) / q + gamma_l(N, m, q);
                        ok = ok && std::abs(lhsv + f_ss(N, m, p, q)) < 1e-12;
                    }
        check(ok, "gamma_l identity", failures);
    }
    {
        const double v = phi(3, 1.0);
        check(std::abs(v - std::sinh(1.0)) < 1e-10, "phi N=3 closed form",
              failures);
        RadialStencil st{0.01, 501};
        std::vector<double> f(st.n);
        Eigenfunction ph(3, 1.0);
        for (int j = 0; j < st.n; ++j) f[j] = ph.value(st.r(j));
        const auto lap = apply_radial_laplacian(f, st, 3);
        double worst = 0.0;
        for (int j = 0; j + 1 < st.n; ++j)
            worst = std::max(worst, std::abs(lap[j] - f[j]) / f[j]);
        check(worst < 1e-3, "eigenfunction identity", failures);
    }
    {
        IntegratedSolution W(3, 0.0, 1.5);
        check(std::abs(W.value(0.0, 0.0) - 1.0 / 1.5) < 1e-9,
              "W_beta(0,0) = 1/beta", failures);
    }
    std::cout << (failures == 0 ? "verify: all checks passed\n"
                                : "verify: FAILURES present\n");
    return failures == 0 ? 0 : 1;
}

int cmd_simulate(const RunConfig& rc, const std::string& out, bool snapshots) {
    RunConfig cfg = rc;
    if (snapshots && cfg.grid.snapshot_stride <= 0) cfg.grid.snapshot_stride = 16;
    TricomiSolver solver(cfg.problem, cfg.grid, cfg.T_max);
    const SimulationOutcome res = solver.run_until_blowup(cfg.threshold);
    std::cout << "status: ";
    switch (res.status) {
        case RunStatus::BlewUp:
            std::cout << "blew up, T_est = " << res.T_est
                      << " (crossing " << res.T_cross << ", component "
                      << (res.component == 0 ? "u" : "v") << ")\n";
            break;
        case RunStatus::ReachedTmax:
            std::cout << "reached T_max = " << solver.T_max() << "\n";
            break;
        case RunStatus::Diverged:
            std::cout << "diverged at t = " << res.T_est << "\n";
            break;
    }
    std::cout << "steps: " << res.diag.steps << ", dt in [" << res.diag.dt_min
              << ", " << res.diag.dt_max << "]\n";
    if (!out.empty()) {
        std::vector<std::string> outputs;
        if (snapshots && res.history) {
            write_snapshots_csv(*res.history, out);
            outputs.push_back(out);
            std::cout << "wrote " << out << "\n";
        }
        write_manifest(cfg, outputs, out + ".manifest.json");
    }
    return 0;
}

int cmd_sweep(const RunConfig& rc, const std::string& eps_list,
              const std::string& out) {
    std::vector<double> eps;
    std::stringstream ss(eps_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) eps.push_back(std::stod(tok));
    if (eps.empty()) throw CLI::ValidationError("--eps list is empty");
    const auto records =
        sweep_lifespan(rc.problem, eps, rc.grid, rc.T_max, rc.threshold);
    for (const auto& r : records) {
        std::cout << "eps = " << r.epsilon << "  T = " << r.T_measured;
        if (!r.blew_up) std::cout << "  [" << r.note << "]";
        std::cout << "\n";
    }
    if (!out.empty()) {
        write_records_csv(records, out);
        const std::vector<std::string> outputs{out};
        write_manifest(rc, outputs, out + ".manifest.json");
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_fit(const RunConfig& rc, const std::string& in, const std::string& plot,
            double tol) {
    const auto records = read_records_csv(in);
    const FitResult fit = fit_power_law(records);
    std::cout << "fit: slope = " << fit.slope << " +- " << fit.stderr_slope
              << " over " << fit.n_points << " points";
    if (!fit.excluded.empty())
        std::cout << " (" << fit.excluded.size() << " excluded)";
    std::cout << "\n";
    const RegimeReport rep = classify_regime(rc.problem.expo);
    const ComparisonResult cmp = compare_with_prediction(fit, rep, tol);
    std::cout << "verdict: " << verdict_name(cmp.verdict) << " - " << cmp.detail;
    if (cmp.sharpness_observed) std::cout << " [sharpness observed]";
    std::cout << "\n";
    if (!plot.empty()) {
        export_lifespan_plot(records, fit, rep, plot);
        std::cout << "wrote " << plot << "\n";
    }
    return cmp.verdict == Verdict::Fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for degenerate-speed semilinear systems"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* curves = app.add_subcommand("curves", "print exponents and regime");
    add_config_flags(curves, opts);

    auto* region = app.add_subcommand("region", "emit the (p,q) region plot");
    add_config_flags(region, opts);
    std::string region_out = "region.svg";
    int region_cells = 48;
    region->add_option("--out", region_out, "output SVG path");
    region->add_option("--cells", region_cells, "grid cells per axis");

    auto* special = app.add_subcommand("special", "evaluate w/W and run checkers");
    add_config_flags(special, opts);
    double sp_lambda = 0.0, sp_beta = 0.0, sp_x = 0.0, sp_t = 1.0;
    special->add_option("--lambda", sp_lambda, "lambda of w_lambda (0 = skip)");
    special->add_option("--beta", sp_beta, "beta of W_beta (0 = skip)");
    special->add_option("--x", sp_x, "|x|");
    special->add_option("--t", sp_t, "t");

    auto* verify = app.add_subcommand("verify", "run the built-in invariant suite");

    auto* simulate = app.add_subcommand("simulate", "single simulation run");
    add_config_flags(simulate, opts);
    std::string sim_out;
    bool sim_snapshots = false;
    simulate->add_option("--out", sim_out, "snapshot CSV path");
    simulate->add_flag("--snapshots", sim_snapshots, "store and dump snapshots");

    auto* sweep = app.add_subcommand("sweep", "epsilon sweep to records CSV");
    add_config_flags(sweep, opts, /*with_eps=*/false);
    std::string sweep_eps = "0.8,0.4,0.2,0.1,0.05,0.025";
    std::string sweep_out;
    sweep->add_option("--eps", sweep_eps, "comma-separated epsilon list");
    sweep->add_option("--out", sweep_out, "records CSV path");

    auto* fit = app.add_subcommand("fit", "fit records and compare to prediction");
    add_config_flags(fit, opts);
    std::string fit_in, fit_plot;
    double fit_tol = 0.25;
    fit->add_option("--in", fit_in, "records CSV path")->required();
    fit->add_option("--plot", fit_plot, "lifespan plot SVG path");
    fit->add_option("--tol", fit_tol, "verdict tolerance fraction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (curves->parsed()) return cmd_curves(resolve_config(opts, curves));
        if (region->parsed())
            return cmd_region(resolve_config(opts, region), region_out,
                              region_cells);
        if (special->parsed())
            return cmd_special(resolve_config(opts, special), sp_lambda, sp_beta,
                               sp_x, sp_t);
        if (verify->parsed()) return cmd_verify();
        if (simulate->parsed())
            return cmd_simulate(resolve_config(opts, simulate), sim_out,
                                sim_snapshots);
        if (sweep->parsed())
            return cmd_sweep(resolve_config(opts, sweep, /*with_eps=*/false), sweep_eps,
                             sweep_out);
        if (fit->parsed())
            return cmd_fit(resolve_config(opts, fit), fit_in, fit_plot, fit_tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
