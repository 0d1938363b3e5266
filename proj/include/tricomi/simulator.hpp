#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricomi/exponents.hpp"
#include "tricomi/test_solutions.hpp"

namespace tricomi {

enum class DataProfile { Zero, Bump, Quartic };

DataProfile data_profile_from_name(const std::string& name);
const char* data_profile_name(DataProfile p);

// Compactly supported radial shape, 1 at the origin, 0 for r >= r0.
double profile_value(DataProfile p, double r, double r0);

// One record driving every module: exponents, data size and shape, coupling
// constants of G1(v) = a|v|^p, G2(u) = b|u|^q.
struct ProblemConfig {
    ExponentConfig expo;
    double epsilon = 0.1;
    DataProfile profile = DataProfile::Bump;
    double r0 = 1.0;
    double a = 1.0;  // 0 switches the u-equation source off (linear mode)
    double b = 1.0;
    // amplitudes of (f1, g1, f2, g2) relative to the named profile; the
    // defaults put all the data in the velocities, so I[g] > 0.
    double f1_amp = 0.0, g1_amp = 1.0, f2_amp = 0.0, g2_amp = 1.0;

    void validate() const;
};

struct GridSpec {
    double dr = 0.02;
    double c_cfl = 0.4;
    double speed_floor = 0.05;    // keeps dt finite while t^{m/2} -> 0
    double domain_radius = 0.0;   // 0 = auto: r0 + envelope(T_max) + margin
    double domain_margin = 1.0;
    int snapshot_stride = 0;      // 0 = keep no history
    Exec exec = Exec::Parallel;

    std::string dt_policy() const;
};

struct Snapshot {
    double t = 0.0;
    std::vector<double> u, v;    // fields
    std::vector<double> ut, vt;  // centered time derivatives at t
};

struct History {
    RadialStencil stencil;
    int N = 1;
    double m1 = 0.0, m2 = 0.0;
    ProblemConfig config;
    std::vector<Snapshot> snaps;
};

enum class RunStatus { BlewUp, ReachedTmax, Diverged };

struct Diagnostics {
    long steps = 0;
    double dt_min = 0.0, dt_max = 0.0;
    double max_u = 0.0, max_v = 0.0;
};

struct SimulationOutcome {
    RunStatus status = RunStatus::ReachedTmax;
    double T_est = 0.0;    // extrapolated blow-up time when status == BlewUp
    double T_cross = 0.0;  // raw threshold-crossing time
    int component = 0;     // which field crossed (0 = u, 1 = v)
    Diagnostics diag;
    std::shared_ptr<History> history;
};

// Explicit second-order solver of the coupled degenerate system on a radial
// grid. The outer boundary is homogeneous Dirichlet placed causally out of
// reach; the t = 0 start uses the Taylor step, where the t^m coefficient
// removes the Laplacian for m > 0.
class TricomiSolver {
  public:
    TricomiSolver(const ProblemConfig& cfg, const GridSpec& grid, double T_max);

    // Initialize u from an exact special solution instead of the named
    // profile data (v stays zero); used by convergence oracles. A smooth
    // spatial cutoff is applied from cut_radius outward.
    void init_from_special(const SpecialSolution& w, double cut_radius,
                           double cut_width);

    void step();
    SimulationOutcome run_until_blowup(double amplitude_threshold);

    double time() const { return t_; }
    const RadialStencil& stencil() const { return stencil_; }
    std::span<const double> u() const { return u_; }
    std::span<const double> v() const { return v_; }
    const ProblemConfig& config() const { return cfg_; }
    double T_max() const { return t_max_; }
    std::shared_ptr<History> history() const { return history_; }
    // numerical support: largest r where either field exceeds tol_rel times
    // the current max amplitude (0 when the state is identically zero)
    double support_radius(double tol_rel = 1e-10) const;

  private:
    double pick_dt() const;
    void record_snapshot_if_due();
    void finalize_snapshot_velocity();

    ProblemConfig cfg_;
    GridSpec grid_;
    double t_max_;
    RadialStencil stencil_;
    double t_ = 0.0;
    double dt_prev_ = 0.0;
    long steps_ = 0;
    std::vector<double> u_, v_, u_prev_, v_prev_;
    std::vector<double> du0_, dv0_;  // initial velocities (Taylor start, t=0 snapshot)
    std::vector<double> lap_, src_, next_u_, next_v_;
    std::shared_ptr<History> history_;
    Diagnostics diag_;
    // pending snapshot whose velocity needs the next level
    std::optional<std::size_t> pending_snap_;
    double pending_h_old_ = 0.0;
};

// Finite-propagation audit of a stored history: the numerical support radius
// must stay inside r0 + envelope(t) plus a few stencil cells of slack.
struct SupportAuditReport {
    bool pass = true;
    double worst_excess = 0.0;  // in units of dr, max over snapshots
    double tol = 0.0;
    std::size_t snapshots = 0;
};

SupportAuditReport audit_finite_speed(const History& h, double support_tol_rel = 1e-10,
                                      double slack_cells = 16.0);

// Space-time quadrature of both sides of the weak identity for the selected
// equation (1 pairs G1(v) with the u-equation, 2 the other way):
//   lhs = eps int g Phi(0) + int int G Phi,
//   rhs = -int int u_t Phi_t + int int t^m grad u . grad Phi.
struct WeakFormResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double rhs_box = 0.0;  // int int u (Phi_tt - t^m Delta Phi) + eps int f dPhi(0)
};

WeakFormResult weak_form_residual(const History& h, const CompositeTestFunction& F,
                                  int which);

// Y[W](R) = int_0^R [ int int W (eta*_sigma)^k ] sigma^{-1} dsigma and the
// differential identities: dY/dR = S(R)/R and Y(R) <= S(R), with
// S(sigma) = int int W (eta*_sigma)^k.
struct YFunctionalReport {
    std::vector<double> R, Y, S, dY;
    double max_derivative_dev = 0.0;  // relative
    double max_domination_excess = 0.0;
    bool derivative_ok = false;
    bool domination_ok = false;
};

// Mass already reduced over space: M(t) = int W(x, t) dx, piecewise linear.
YFunctionalReport y_functional_from_mass(std::span<const double> t_nodes,
                                         std::span<const double> mass, double k,
                                         std::span<const double> R_grid,
                                         double tol = 1e-6);

// W = G1(v) W_beta from a stored history.
YFunctionalReport y_functional(const History& h, const IntegratedSolution& Wb,
                               double k, std::span<const double> R_grid,
                               double tol = 1e-6);

struct LifespanRecord {
    double epsilon = 0.0;
    double T_measured = 0.0;  // +inf encodes ReachedTmax, NaN a failed run
    double threshold_used = 0.0;
    double dr = 0.0;
    std::string dt_policy;
    bool blew_up = false;
    std::string note;
};

// One run per epsilon; the domain tracks r0 + envelope(T_max). Runs execute
// in parallel with serial inner kernels; records come back in input order.
std::vector<LifespanRecord> sweep_lifespan(const ProblemConfig& base,
                                           std::span<const double> epsilons,
                                           const GridSpec& grid, double T_max,
                                           double threshold);

}  // namespace tricomi
