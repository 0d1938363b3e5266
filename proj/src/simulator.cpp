#include "tricomi/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tricomi/quadrature.hpp"

namespace tricomi {

DataProfile data_profile_from_name(const std::string& name) {
    if (name == "zero") return DataProfile::Zero;
    if (name == "bump") return DataProfile::Bump;
    if (name == "quartic") return DataProfile::Quartic;
    throw std::invalid_argument("unknown data profile: " + name);
}

const char* data_profile_name(DataProfile p) {
    switch (p) {
        case DataProfile::Zero: return "zero";
        case DataProfile::Bump: return "bump";
        case DataProfile::Quartic: return "quartic";
    }
    return "?";
}

double profile_value(DataProfile p, double r, double r0) {
    if (r >= r0 || p == DataProfile::Zero) return 0.0;
    const double z = (r / r0) * (r / r0);
    if (p == DataProfile::Bump) return std::exp(1.0 - 1.0 / (1.0 - z));
    const double w = 1.0 - z;
    return w * w * w * w;
}

void ProblemConfig::validate() const {
    expo.validate();
    if (epsilon < 0.0) throw std::invalid_argument("ProblemConfig: epsilon < 0");
    if (!(r0 > 0.0)) throw std::invalid_argument("ProblemConfig: r0 must be positive");
    if (a < 0.0 || b < 0.0)
        throw std::invalid_argument("ProblemConfig: coupling constants must be >= 0");
}

std::string GridSpec::dt_policy() const {
    std::ostringstream os;
    os << "cfl" << c_cfl << "_floor" << speed_floor;
    return os.str();
}

TricomiSolver::TricomiSolver(const ProblemConfig& cfg, const GridSpec& grid,
                             double T_max)
    : cfg_(cfg), grid_(grid), t_max_(T_max) {
    cfg_.validate();
    if (!(T_max > 0.0)) throw std::invalid_argument("TricomiSolver: T_max <= 0");
    if (!(grid_.dr > 0.0)) throw std::invalid_argument("TricomiSolver: dr <= 0");
    if (!(grid_.c_cfl > 0.0 && grid_.c_cfl <= 1.0))
        throw std::invalid_argument("TricomiSolver: c_cfl outside (0, 1]");

    const double needed =
        cfg_.r0 + propagation_envelope(cfg_.expo.m1, cfg_.expo.m2, T_max);
    double radius = grid_.domain_radius;
    if (radius == 0.0) {
        radius = needed + grid_.domain_margin;
    } else if (radius < needed) {
        throw std::invalid_argument(
            "TricomiSolver: domain radius smaller than the causal reach "
            "r0 + envelope(T_max)");
    }
    stencil_.dr = grid_.dr;
    stencil_.n = static_cast<int>(std::ceil(radius / grid_.dr)) + 1;
    if (stencil_.n < 8)
        throw std::invalid_argument("TricomiSolver: grid too short");

    const int n = stencil_.n;
    u_.assign(n, 0.0);
    v_.assign(n, 0.0);
    u_prev_.assign(n, 0.0);
    v_prev_.assign(n, 0.0);
    du0_.assign(n, 0.0);
    dv0_.assign(n, 0.0);
    lap_.assign(n, 0.0);
    src_.assign(n, 0.0);
    next_u_.assign(n, 0.0);
    next_v_.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double s = profile_value(cfg_.profile, stencil_.r(j), cfg_.r0);
        u_[j] = cfg_.epsilon * cfg_.f1_amp * s;
        v_[j] = cfg_.epsilon * cfg_.f2_amp * s;
        du0_[j] = cfg_.epsilon * cfg_.g1_amp * s;
        dv0_[j] = cfg_.epsilon * cfg_.g2_amp * s;
    }
    if (grid_.snapshot_stride > 0) {
        history_ = std::make_shared<History>();
        history_->stencil = stencil_;
        history_->N = cfg_.expo.N;
        history_->m1 = cfg_.expo.m1;
        history_->m2 = cfg_.expo.m2;
        history_->config = cfg_;
        record_snapshot_if_due();
    }
}

void TricomiSolver::init_from_special(const SpecialSolution& w, double cut_radius,
                                      double cut_width) {
    if (steps_ != 0)
        throw std::logic_error("init_from_special: solver already advanced");
    SpatialCutoff cut{cut_radius, cut_width};
    for (int j = 0; j < stencil_.n; ++j) {
        const double r = stencil_.r(j);
        const double c = cut.value(r);
        u_[j] = w.value(r, 0.0) * c;
        du0_[j] = w.dt(r, 0.0) * c;
        v_[j] = 0.0;
        dv0_[j] = 0.0;
    }
    // the data support is now the cutoff reach, not the named profile's r0
    cfg_.r0 = cut_radius + cut_width;
    if (history_) {
        history_->config = cfg_;
        history_->snaps.clear();
        record_snapshot_if_due();
    }
}

double TricomiSolver::support_radius(double tol_rel) const {
    double amp = 0.0;
    for (int j = 0; j < stencil_.n; ++j)
        amp = std::max({amp, std::abs(u_[j]), std::abs(v_[j])});
    if (amp == 0.0) return 0.0;
    const double tol = tol_rel * amp;
    for (int j = stencil_.n - 1; j >= 0; --j)
        if (std::abs(u_[j]) > tol || std::abs(v_[j]) > tol) return stencil_.r(j);
    return 0.0;
}

double TricomiSolver::pick_dt() const {
    const auto speed = [&](double t) {
        return std::max({std::pow(t, 0.5 * cfg_.expo.m1),
                         std::pow(t, 0.5 * cfg_.expo.m2), grid_.speed_floor});
    };
    double dt = grid_.c_cfl * grid_.dr / speed(t_);
    dt = grid_.c_cfl * grid_.dr / speed(t_ + dt);  // conservative second pass
    const double remaining = t_max_ - t_;
    if (dt > remaining) dt = remaining;
    return dt;
}

void TricomiSolver::record_snapshot_if_due() {
    if (!history_ || grid_.snapshot_stride <= 0) return;
    if (steps_ % grid_.snapshot_stride != 0) return;
    Snapshot s;
    s.t = t_;
    s.u = u_;
    s.v = v_;
    if (steps_ == 0) {
        s.ut = du0_;
        s.vt = dv0_;
        history_->snaps.push_back(std::move(s));
        return;
    }
    // velocity needs the next level; park the previous one in ut/vt
    s.ut = u_prev_;
    s.vt = v_prev_;
    history_->snaps.push_back(std::move(s));
    pending_snap_ = history_->snaps.size() - 1;
    pending_h_old_ = dt_prev_;
}

void TricomiSolver::finalize_snapshot_velocity() {
    if (!pending_snap_) return;
    Snapshot& s = history_->snaps[*pending_snap_];
    const double span = dt_prev_ + pending_h_old_;  // dt_prev_ is now h_new
    for (int j = 0; j < stencil_.n; ++j) {
        s.ut[j] = (u_[j] - s.ut[j]) / span;
        s.vt[j] = (v_[j] - s.vt[j]) / span;
    }
    pending_snap_.reset();
}

void TricomiSolver::step() {
    const double dt = pick_dt();
    if (!(dt > 0.0)) return;
    const Exec exec = grid_.exec;
    const double m1 = cfg_.expo.m1, m2 = cfg_.expo.m2;
    const double coef_u = std::pow(t_, m1);
    const double coef_v = std::pow(t_, m2);

    if (steps_ == 0) {
        // Taylor start; for m > 0 the degenerate coefficient removes the
        // Laplacian at t = 0.
        radial_laplacian(u_, lap_, stencil_.dr, cfg_.expo.N, exec);
        power_source(v_, src_, cfg_.a, cfg_.expo.p, exec);
        for (int j = 0; j < stencil_.n; ++j)
            next_u_[j] = u_[j] + dt * du0_[j] +
                         0.5 * dt * dt * (coef_u * lap_[j] + src_[j]);
        radial_laplacian(v_, lap_, stencil_.dr, cfg_.expo.N, exec);
        power_source(u_, src_, cfg_.b, cfg_.expo.q, exec);
        for (int j = 0; j < stencil_.n; ++j)
            next_v_[j] = v_[j] + dt * dv0_[j] +
                         0.5 * dt * dt * (coef_v * lap_[j] + src_[j]);
    } else {
        radial_laplacian(u_, lap_, stencil_.dr, cfg_.expo.N, exec);
        power_source(v_, src_, cfg_.a, cfg_.expo.p, exec);
        leapfrog_update(next_u_, u_, u_prev_, lap_, src_, coef_u, dt, dt_prev_,
                        exec);
        radial_laplacian(v_, lap_, stencil_.dr, cfg_.expo.N, exec);
        power_source(u_, src_, cfg_.b, cfg_.expo.q, exec);
        leapfrog_update(next_v_, v_, v_prev_, lap_, src_, coef_v, dt, dt_prev_,
                        exec);
    }
    u_prev_.swap(u_);
    u_.swap(next_u_);
    v_prev_.swap(v_);
    v_.swap(next_v_);
    t_ += dt;
    dt_prev_ = dt;
    ++steps_;
    diag_.steps = steps_;
    diag_.dt_min = diag_.dt_min == 0.0 ? dt : std::min(diag_.dt_min, dt);
    diag_.dt_max = std::max(diag_.dt_max, dt);
    finalize_snapshot_velocity();
    record_snapshot_if_due();
}

SimulationOutcome TricomiSolver::run_until_blowup(double amplitude_threshold) {
    if (!(amplitude_threshold > 0.0))
        throw std::invalid_argument("run_until_blowup: threshold must be positive");
    SimulationOutcome out;
    std::deque<std::pair<double, double>> tail;  // (t, max amplitude)
    const double fit_gate = amplitude_threshold * 1e-2;
    bool crossed = false;

    while (t_ < t_max_ * (1.0 - 1e-12)) {
        step();
        const MaxAmplitude amp = max_amplitude(u_, v_, grid_.exec);
        diag_.max_u = std::max(diag_.max_u, amp.component == 0 ? amp.value : 0.0);
        diag_.max_v = std::max(diag_.max_v, amp.component == 1 ? amp.value : 0.0);
        if (!std::isfinite(amp.value)) {
            out.status = crossed ? RunStatus::BlewUp : RunStatus::Diverged;
            out.T_cross = crossed ? out.T_cross : t_;
            break;
        }
        if (amp.value >= fit_gate) {
            tail.emplace_back(t_, amp.value);
            if (tail.size() > 4096) {
                // decimate, keeping the dense tail
                std::deque<std::pair<double, double>> half;
                for (std::size_t i = 0; i < tail.size(); i += 2)
                    half.push_back(tail[i]);
                tail.swap(half);
            }
        }
        if (!crossed && amp.value >= amplitude_threshold) {
            crossed = true;
            out.T_cross = t_;
            out.component = amp.component;
        }
        if (crossed && amp.value >= 10.0 * amplitude_threshold) {
            out.status = RunStatus::BlewUp;
            break;
        }
    }
    if (crossed) {
        out.status = RunStatus::BlewUp;
        // extrapolate 1/amplitude to zero over the recorded tail
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const auto n = static_cast<double>(tail.size());
        for (const auto& [t, a] : tail) {
            const double y = 1.0 / a;
            sx += t;
            sy += y;
            sxx += t * t;
            sxy += t * y;
        }
        const double det = n * sxx - sx * sx;
        double T = out.T_cross;
        if (tail.size() >= 3 && det > 0.0) {
            const double slope = (n * sxy - sx * sy) / det;
            const double icpt = (sy - slope * sx) / n;
            if (slope < 0.0) {
                const double root = -icpt / slope;
                if (root >= out.T_cross && root <= t_max_) T = root;
            }
        }
        out.T_est = std::min(T, t_max_);
    } else if (out.status == RunStatus::Diverged) {
        out.T_est = t_;
    } else {
        out.status = RunStatus::ReachedTmax;
        out.T_est = t_max_;
    }
    out.diag = diag_;
    out.history = history_;
    return out;
}

SupportAuditReport audit_finite_speed(const History& h, double support_tol_rel,
                                      double slack_cells) {
    SupportAuditReport rep;
    rep.snapshots = h.snaps.size();
    const double dr = h.stencil.dr;
    for (const Snapshot& s : h.snaps) {
        double amp = 0.0;
        for (int j = 0; j < h.stencil.n; ++j)
            amp = std::max({amp, std::abs(s.u[j]), std::abs(s.v[j])});
        if (amp == 0.0) continue;
        const double tol = support_tol_rel * amp;
        int last = -1;
        for (int j = h.stencil.n - 1; j >= 0; --j) {
            if (std::abs(s.u[j]) > tol || std::abs(s.v[j]) > tol) {
                last = j;
                break;
            }
        }
        if (last < 0) continue;
        const double allowed =
            h.config.r0 + propagation_envelope(h.m1, h.m2, s.t);
        const double excess = (h.stencil.r(last) - allowed) / dr;
        rep.worst_excess = std::max(rep.worst_excess, excess);
    }
    rep.tol = slack_cells;
    rep.pass = rep.worst_excess <= slack_cells;
    return rep;
}

namespace {

// Base-field matrices on the history grid: value, d/dt, radial derivative.
struct BaseGridEval {
    std::vector<double> b, bt, bx;  // row-major [it][ir]
};

BaseGridEval eval_base(const CompositeTestFunction& F, const History& h) {
    const auto& snaps = h.snaps;
    const int nr = h.stencil.n;
    const std::size_t nt = snaps.size();
    BaseGridEval e;
    e.b.resize(nr * nt);
    e.bt.resize(nr * nt);
    e.bx.resize(nr * nt);
    if (const auto* w = std::get_if<SpecialSolution>(&F.base())) {
        std::vector<double> yv(nt), dyv(nt), ph(nr), dph(nr);
        for (std::size_t it = 0; it < nt; ++it) {
            yv[it] = w->ode().value(snaps[it].t);
            dyv[it] = w->ode().derivative(snaps[it].t);
        }
        const long nrl = nr;
#pragma omp parallel for schedule(dynamic)
        for (long j = 0; j < nrl; ++j) {
            ph[j] = w->eigenfunction().value(h.stencil.r(j));
            dph[j] = w->eigenfunction().d1(h.stencil.r(j));
        }
        for (std::size_t it = 0; it < nt; ++it)
            for (int j = 0; j < nr; ++j) {
                e.b[it * nr + j] = yv[it] * ph[j];
                e.bt[it * nr + j] = dyv[it] * ph[j];
                e.bx[it * nr + j] = yv[it] * dph[j];
            }
    } else {
        const auto& wi = std::get<IntegratedSolution>(F.base());
        std::vector<double> r_grid(nr), t_grid(nt);
        for (int j = 0; j < nr; ++j) r_grid[j] = h.stencil.r(j);
        for (std::size_t it = 0; it < nt; ++it) t_grid[it] = snaps[it].t;
        WGridEvaluator ev(wi, r_grid, t_grid);
        for (std::size_t it = 0; it < nt; ++it)
            for (int j = 0; j < nr; ++j) {
                e.b[it * nr + j] = ev.value(j, it);
                e.bt[it * nr + j] = ev.dt(j, it);
                e.bx[it * nr + j] = ev.dx(j, it);
            }
    }
    return e;
}

}  // namespace

WeakFormResult weak_form_residual(const History& h, const CompositeTestFunction& F,
                                  int which) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("weak_form_residual: which must be 1 or 2");
    if (h.snaps.size() < 3)
        throw std::invalid_argument("weak_form_residual: history too short");
    const double R = F.cutoff().R;
    if (h.snaps.back().t < R * (1.0 - 1e-9))
        throw std::invalid_argument(
            "weak_form_residual: cutoff extends past the stored horizon");

    const ProblemConfig& cfg = h.config;
    const int nr = h.stencil.n;
    const std::size_t nt = h.snaps.size();
    const double dr = h.stencil.dr;
    const double m = which == 1 ? h.m1 : h.m2;
    const double power = which == 1 ? cfg.expo.p : cfg.expo.q;
    const double amp = which == 1 ? cfg.a : cfg.b;
    const double g_amp = which == 1 ? cfg.g1_amp : cfg.g2_amp;
    const double f_amp = which == 1 ? cfg.f1_amp : cfg.f2_amp;

    // radial measure with trapezoid end weights
    const double area = sphere_area(h.N);
    std::vector<double> mu(nr);
    for (int j = 0; j < nr; ++j) {
        const double wj = (j == 0 || j == nr - 1) ? 0.5 : 1.0;
        mu[j] = area * std::pow(h.stencil.r(j), h.N - 1) * dr * wj;
    }

    const BaseGridEval base = eval_base(F, h);
    const CutoffConfig& cut = F.cutoff();
    const SpatialCutoff& chi = F.chi();

    double lhs_source = 0.0, rhs = 0.0, rhs_box = 0.0;
    std::vector<double> ur(nr);
    for (std::size_t it = 0; it < nt; ++it) {
        const Snapshot& s = h.snaps[it];
        if (s.t >= R) break;
        // trapezoid weight in time on the nonuniform snapshot nodes
        const double t_lo = it == 0 ? s.t : h.snaps[it - 1].t;
        const double t_hi = it + 1 < nt ? h.snaps[it + 1].t : s.t;
        const double wt = 0.5 * (t_hi - t_lo);

        const std::vector<double>& fld = which == 1 ? s.u : s.v;
        const std::vector<double>& fld_t = which == 1 ? s.ut : s.vt;
        const std::vector<double>& other = which == 1 ? s.v : s.u;
        ur[0] = 0.0;  // even symmetry at the origin
        for (int j = 1; j < nr; ++j) {
            const double up = j + 1 < nr ? fld[j + 1] : 0.0;
            ur[j] = (up - fld[j - 1]) / (2.0 * dr);
        }
        const double sc = s.t / cut.R;
        const double e0 = eta(sc);
        if (e0 <= 0.0) continue;
        const double f0 = std::pow(e0, cut.k);
        const double f1 = cut.k * std::pow(e0, cut.k - 1.0) * eta_d1(sc) / cut.R;
        const double f2 = (cut.k * (cut.k - 1.0) * std::pow(e0, cut.k - 2.0) *
                               eta_d1(sc) * eta_d1(sc) +
                           cut.k * std::pow(e0, cut.k - 1.0) * eta_d2(sc)) /
                          (cut.R * cut.R);
        const double tm = std::pow(s.t, m);
        for (int j = 0; j < nr; ++j) {
            const double r = h.stencil.r(j);
            const double cj = chi.value(r);
            const double cj1 = chi.d1(r);
            const double B = base.b[it * nr + j];
            const double BT = base.bt[it * nr + j];
            const double BX = base.bx[it * nr + j];
            const double Phi = B * cj * f0;
            const double Phi_t = BT * cj * f0 + B * cj * f1;
            const double Phi_r = (BX * cj + B * cj1) * f0;
            const double box = cj * (2.0 * BT * f1 + B * f2);

            lhs_source += wt * mu[j] * amp * pow_abs(other[j], power) * Phi;
            rhs += wt * mu[j] * (-fld_t[j] * Phi_t + tm * ur[j] * Phi_r);
            rhs_box += wt * mu[j] * fld[j] * box;
        }
    }

    // data terms at t = 0
    double lhs_data = 0.0, f_term = 0.0;
    {
        const double f0 = std::pow(eta(0.0), cut.k);  // = 1
        const double f1 = 0.0;                        // eta' vanishes at 0
        for (int j = 0; j < nr; ++j) {
            const double r = h.stencil.r(j);
            const double g = cfg.epsilon * g_amp * profile_value(cfg.profile, r, cfg.r0);
            const double fdat =
                cfg.epsilon * f_amp * profile_value(cfg.profile, r, cfg.r0);
            const double B = base.b[j];
            const double BT = base.bt[j];
            const double cj = chi.value(r);
            lhs_data += mu[j] * g * B * cj * f0;
            f_term += mu[j] * fdat * (BT * cj * f0 + B * cj * f1);
        }
    }

    WeakFormResult res;
    res.lhs = lhs_data + lhs_source;
    res.rhs = rhs;
    res.rhs_box = rhs_box + f_term;
    return res;
}

namespace {

// S(sigma) = int M(t) eta*(t/sigma)^k dt with M piecewise linear on t_nodes.
double window_integral(std::span<const double> t_nodes,
                       std::span<const double> mass, double k, double sigma) {
    if (sigma <= 0.0) return 0.0;
    const double lo = 0.5 * sigma;
    const double hi = std::min(sigma, t_nodes.back());
    if (hi <= lo) return 0.0;
    auto interp = [&](double t) {
        const auto it = std::upper_bound(t_nodes.begin(), t_nodes.end(), t);
        std::size_t i1 = std::min<std::size_t>(
            t_nodes.size() - 1, static_cast<std::size_t>(it - t_nodes.begin()));
        if (i1 == 0) i1 = 1;
        const std::size_t i0 = i1 - 1;
        const double w = (t - t_nodes[i0]) / (t_nodes[i1] - t_nodes[i0]);
        return mass[i0] + w * (mass[i1] - mass[i0]);
    };
    // split at the stored nodes so every panel is smooth
    double total = 0.0;
    double a = lo;
    for (double node : t_nodes) {
        if (node <= lo || node >= hi) continue;
        total += fixed_gl(
            [&](double t) { return interp(t) * std::pow(eta_star(t / sigma), k); },
            a, node, 8);
        a = node;
    }
    total += fixed_gl(
        [&](double t) { return interp(t) * std::pow(eta_star(t / sigma), k); }, a,
        hi, 8);
    return total;
}

}  // namespace

YFunctionalReport y_functional_from_mass(std::span<const double> t_nodes,
                                         std::span<const double> mass, double k,
                                         std::span<const double> R_grid,
                                         double tol) {
    if (t_nodes.size() != mass.size() || t_nodes.size() < 2)
        throw std::invalid_argument("y_functional_from_mass: bad sampling");
    for (double m : mass)
        if (m < 0.0)
            throw std::invalid_argument(
                "y_functional_from_mass: negative integrand mass");
    auto S = [&](double sigma) { return window_integral(t_nodes, mass, k, sigma); };

    YFunctionalReport rep;
    double s_ref = 0.0;
    for (double R : R_grid) s_ref = std::max(s_ref, S(R));
    double y_acc = 0.0;
    double prev_R = 0.0;
    for (double R : R_grid) {
        if (R <= prev_R)
            throw std::invalid_argument("y_functional_from_mass: R grid not increasing");
        y_acc += adaptive_gk([&](double s) { return s > 0 ? S(s) / s : 0.0; },
                             prev_R, R, 1e-13, 1e-10);
        prev_R = R;
        const double sR = S(R);
        // exact central difference of Y as the window average of S/sigma;
        // avoids differencing the large accumulated integral
        const double h = 1e-4 * R;
        const double dy_num =
            adaptive_gk([&](double s) { return S(s) / s; }, R - h, R + h, 1e-15,
                        1e-11) /
            (2.0 * h);
        rep.R.push_back(R);
        rep.Y.push_back(y_acc);
        rep.S.push_back(sR);
        rep.dY.push_back(dy_num);
        const double scale = std::abs(sR / R) + 1e-9 * s_ref / R + 1e-300;
        rep.max_derivative_dev = std::max(
            rep.max_derivative_dev, std::abs(dy_num - sR / R) / scale);
        const double excess = (y_acc - sR) / (sR + 1e-9 * s_ref + 1e-300);
        rep.max_domination_excess = std::max(rep.max_domination_excess, excess);
    }
    rep.derivative_ok = rep.max_derivative_dev <= tol;
    rep.domination_ok = rep.max_domination_excess <= tol;
    return rep;
}

YFunctionalReport y_functional(const History& h, const IntegratedSolution& Wb,
                               double k, std::span<const double> R_grid,
                               double tol) {
    if (h.snaps.size() < 2)
        throw std::invalid_argument("y_functional: history too short");
    const int nr = h.stencil.n;
    const std::size_t nt = h.snaps.size();
    std::vector<double> r_grid(nr), t_nodes(nt);
    for (int j = 0; j < nr; ++j) r_grid[j] = h.stencil.r(j);
    for (std::size_t it = 0; it < nt; ++it) t_nodes[it] = h.snaps[it].t;
    WGridEvaluator ev(Wb, r_grid, t_nodes);

    const double area = sphere_area(h.N);
    const double dr = h.stencil.dr;
    std::vector<double> mass(nt, 0.0);
    for (std::size_t it = 0; it < nt; ++it) {
        const Snapshot& s = h.snaps[it];
        double acc = 0.0;
        for (int j = 0; j < nr; ++j) {
            const double wj = (j == 0 || j == nr - 1) ? 0.5 : 1.0;
            const double G1 = h.config.a * pow_abs(s.v[j], h.config.expo.p);
            const double W = ev.value(j, it);
            if (G1 * W < 0.0)
                throw std::runtime_error("y_functional: negative integrand");
            acc += wj * std::pow(h.stencil.r(j), h.N - 1) * G1 * W;
        }
        mass[it] = area * dr * acc;
    }
    return y_functional_from_mass(t_nodes, mass, k, R_grid, tol);
}

std::vector<LifespanRecord> sweep_lifespan(const ProblemConfig& base,
                                           std::span<const double> epsilons,
                                           const GridSpec& grid, double T_max,
                                           double threshold) {
    std::vector<LifespanRecord> records(epsilons.size());
    const long n = static_cast<long>(epsilons.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        LifespanRecord rec;
        rec.epsilon = epsilons[i];
        rec.threshold_used = threshold;
        rec.dr = grid.dr;
        rec.dt_policy = grid.dt_policy();
        try {
            ProblemConfig cfg = base;
            cfg.epsilon = epsilons[i];
            GridSpec g = grid;
            g.exec = Exec::Serial;  // sweeps parallelize across runs
            g.snapshot_stride = 0;
            TricomiSolver solver(cfg, g, T_max);
            const SimulationOutcome out = solver.run_until_blowup(threshold);
            switch (out.status) {
                case RunStatus::BlewUp:
                    rec.T_measured = out.T_est;
                    rec.blew_up = true;
                    break;
                case RunStatus::ReachedTmax:
                    rec.T_measured = std::numeric_limits<double>::infinity();
                    rec.note = "reached T_max";
                    break;
                case RunStatus::Diverged:
                    rec.T_measured = std::numeric_limits<double>::quiet_NaN();
                    rec.note = "diverged";
                    break;
            }
        } catch (const std::exception& e) {
            rec.T_measured = std::numeric_limits<double>::quiet_NaN();
            rec.note = e.what();
        }
        records[i] = std::move(rec);
    }
    return records;
}

}  // namespace tricomi
