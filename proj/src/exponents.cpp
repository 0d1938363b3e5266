#include "tricomi/exponents.hpp"

#include <algorithm>
#include <cmath>

namespace tricomi {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_pq(double p, double q) {
    require(p > 1.0 && q > 1.0, "exponents: p and q must exceed 1");
    require(p * q > 1.0, "exponents: pq must exceed 1");
}

}  // namespace

void ExponentConfig::validate() const {
    require(N >= 1, "ExponentConfig: N must be a positive integer");
    require(m1 >= 0.0 && m2 >= 0.0, "ExponentConfig: m1, m2 must be nonnegative");
    require(p > 1.0 && q > 1.0, "ExponentConfig: p, q must exceed 1");
}

double gamma_exponent(double m) {
    require(m >= 0.0, "gamma_exponent: m must be nonnegative");
    return 0.5 * (m + 2.0);
}

double f_ss(int N, double m, double p, double q) {
    require(N >= 1 && m >= 0.0, "f_ss: invalid N or m");
    check_pq(p, q);
    return -0.25 * (m + 2.0) * (N - 1) - 0.25 * m - 0.5 * m / q +
           (p + 2.0 + 1.0 / q) / (p * q - 1.0);
}

double gamma_ss(int N, double m, double p, double q) {
    return std::max(f_ss(N, m, p, q), f_ss(N, m, q, p));
}

double f_gg(int N, double m, double p, double q) {
    require(N >= 1 && m >= 0.0, "f_gg: invalid N or m");
    check_pq(p, q);
    return 2.0 * (p + 1.0) / (p * q - 1.0) - (gamma_exponent(m) * N - 1.0);
}

double gamma_gg(int N, double m, double p, double q) {
    return std::max(f_gg(N, m, p, q), f_gg(N, m, q, p));
}

double omega_ss(const ExponentConfig& cfg) {
    cfg.validate();
    if (cfg.equal_speeds())
        throw UndefinedForEqualSpeeds("omega_ss: m1 == m2, use gamma_ss");
    return cfg.m1 > cfg.m2 ? f_ss(cfg.N, cfg.m1, cfg.p, cfg.q)
                           : f_ss(cfg.N, cfg.m2, cfg.q, cfg.p);
}

double omega_gg(const ExponentConfig& cfg) {
    cfg.validate();
    if (cfg.equal_speeds())
        throw UndefinedForEqualSpeeds("omega_gg: m1 == m2, use gamma_gg");
    return cfg.m1 > cfg.m2 ? f_gg(cfg.N, cfg.m1, cfg.p, cfg.q)
                           : f_gg(cfg.N, cfg.m2, cfg.p, cfg.q);
}

double gamma_s_poly(int N, double m, double rho) {
    require(N >= 1 && m >= 0.0, "gamma_s_poly: invalid N or m");
    require(rho >= 1.0, "gamma_s_poly: rho must be >= 1");
    const double a = 0.5 * (m + 2.0) * N - 1.0;
    return -a * rho * rho + (a - m + 2.0) * rho + (m + 2.0);
}

double rho_strauss(int N, double m) {
    require(N >= 1 && m >= 0.0, "rho_strauss: invalid N or m");
    const double a = 0.5 * (m + 2.0) * N - 1.0;
    if (a == 0.0)
        throw InfiniteExponent("rho_strauss: (m+2)N == 2, critical power is infinite");
    const double b = a - m + 2.0;
    const double c = m + 2.0;
    double rho = (b + std::sqrt(b * b + 4.0 * a * c)) / (2.0 * a);
    // one Newton polish step on gamma_S
    const double deriv = -2.0 * a * rho + b;
    if (deriv != 0.0) rho -= gamma_s_poly(N, m, rho) / deriv;
    return rho;
}

double rho_conf(int N, double m) {
    require(N >= 1 && m >= 0.0, "rho_conf: invalid N or m");
    const double d = (m + 2.0) * N - 2.0;
    require(d > 0.0, "rho_conf: (m+2)N must exceed 2");
    return ((m + 2.0) * N + 6.0) / d;
}

double gamma_g(int N, double m, double rho) {
    require(N >= 1 && m >= 0.0, "gamma_g: invalid N or m");
    return 2.0 - (0.5 * (m + 2.0) * N - 1.0) * (rho - 1.0);
}

double rho_glassey(int N) {
    require(N >= 2, "rho_glassey: N must be >= 2");
    return 1.0 + 2.0 / (N - 1);
}

double gamma_l(int N, double m, double theta) {
    require(N >= 1 && m >= 0.0, "gamma_l: invalid N or m");
    require(theta > 1.0, "gamma_l: theta must exceed 1");
    return 0.25 * m + 0.25 * (m + 2.0) * (N - 1) -
           0.5 * (m + 2.0) * (N - 1) / theta - 1.0 / theta;
}

double critical_beta_system(int N, double m1, double q) {
    require(N >= 1 && m1 >= 0.0 && q > 1.0, "critical_beta_system: invalid input");
    const double beta = 0.5 * N - 1.0 / (m1 + 2.0) - 1.0 / q;
    if (!(beta > 0.0))
        throw OutsideValidRange("critical_beta_system: beta must be positive");
    return beta;
}

double critical_beta_single(int N, double m, double p) {
    require(N >= 1 && m >= 0.0 && p > 1.0, "critical_beta_single: invalid input");
    const double beta = -2.0 * m / (2.0 * (m + 2.0)) - m * p / (2.0 * (m + 2.0)) -
                        0.5 * (N - 1) * p + N;
    if (!(beta > 0.0))
        throw OutsideValidRange("critical_beta_single: beta must be positive");
    return beta;
}

double propagation_envelope(double m1, double m2, double t) {
    require(t >= 0.0, "propagation_envelope: t must be nonnegative");
    const double g1 = gamma_exponent(m1);
    const double g2 = gamma_exponent(m2);
    return std::max(std::pow(t, g1) / g1, std::pow(t, g2) / g2);
}

RegimeReport classify_regime(const ExponentConfig& cfg, double tol) {
    cfg.validate();
    RegimeReport rep;
    rep.equal_speeds = cfg.equal_speeds();

    double css, cgg;
    const char* ss_name;
    const char* gg_name;
    if (rep.equal_speeds) {
        css = gamma_ss(cfg.N, cfg.m1, cfg.p, cfg.q);
        cgg = gamma_gg(cfg.N, cfg.m1, cfg.p, cfg.q);
        ss_name = "gamma_ss";
        gg_name = "gamma_gg";
    } else {
        css = omega_ss(cfg);
        cgg = omega_gg(cfg);
        ss_name = "omega_ss";
        gg_name = "omega_gg";
    }
    rep.omega_ss = css;
    rep.omega_gg = cgg;

    if (cgg > tol)
        rep.bounds.push_back({BoundKind::PowerLaw, 1.0 / cgg, cgg, gg_name});
    if (css > tol)
        rep.bounds.push_back({BoundKind::PowerLaw, 1.0 / css, css, ss_name});

    const bool critical = std::abs(css) <= tol;
    if (critical && cfg.N >= 2) {
        double e;
        if (rep.equal_speeds) {
            const double pq1 = cfg.p * cfg.q - 1.0;
            const bool diagonal =
                std::abs(cfg.p - cfg.q) <= 1e-12 * std::max(cfg.p, cfg.q);
            e = diagonal ? cfg.p * (cfg.p - 1.0) : std::min(cfg.p, cfg.q) * pq1;
        } else {
            e = (cfg.m1 > cfg.m2 ? cfg.q : cfg.p) * (cfg.p * cfg.q - 1.0);
        }
        rep.bounds.push_back({BoundKind::ExpPowerLaw, e, css, ss_name});
    }

    if (rep.bounds.empty()) {
        rep.regime = critical ? Regime::StraussCritical : Regime::NoBlowupPredicted;
        rep.primary = {BoundKind::None, 0.0, css, ss_name};
        return rep;
    }

    // primary: among power-law rows the largest curve value (smallest epsilon
    // exponent) is the tightest bound as eps -> 0; exponential rows only win
    // when no power-law row applies.
    const LifespanBound* best = nullptr;
    for (const auto& b : rep.bounds) {
        if (b.kind != BoundKind::PowerLaw) continue;
        if (!best || b.curve_value > best->curve_value) best = &b;
    }
    if (!best) best = &rep.bounds.front();
    rep.primary = *best;

    if (rep.primary.kind == BoundKind::ExpPowerLaw)
        rep.regime = Regime::StraussCritical;
    else if (rep.primary.curve == gg_name)
        rep.regime = Regime::GlasseySubcritical;
    else
        rep.regime = Regime::StraussSubcritical;
    return rep;
}

std::vector<double> log_axis(double lo, double hi, int n) {
    require(lo > 0.0 && hi > lo && n >= 1, "log_axis: invalid range");
    std::vector<double> axis(n);
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        axis[i] = std::exp(la + (lb - la) * (n == 1 ? 1.0 : double(i) / (n - 1)));
    axis.back() = hi;
    return axis;
}

CurveGrid region_sample(int N, double m1, double m2,
                        const std::vector<double>& p_grid,
                        const std::vector<double>& q_grid, double tol) {
    require(!p_grid.empty() && !q_grid.empty(), "region_sample: empty grid");
    for (std::size_t i = 1; i < p_grid.size(); ++i)
        require(p_grid[i] > p_grid[i - 1], "region_sample: p grid not increasing");
    for (std::size_t i = 1; i < q_grid.size(); ++i)
        require(q_grid[i] > q_grid[i - 1], "region_sample: q grid not increasing");
    require(p_grid.front() > 1.0 && q_grid.front() > 1.0,
            "region_sample: grid values must exceed 1");

    CurveGrid grid;
    grid.p_axis = p_grid;
    grid.q_axis = q_grid;
    grid.labels.resize(p_grid.size() * q_grid.size());
    const long np = static_cast<long>(p_grid.size());
    const long nq = static_cast<long>(q_grid.size());
#pragma omp parallel for schedule(static)
    for (long iq = 0; iq < nq; ++iq) {
        for (long ip = 0; ip < np; ++ip) {
            ExponentConfig c{N, m1, m2, p_grid[ip], q_grid[iq]};
            grid.labels[iq * np + ip] = classify_regime(c, tol).regime;
        }
    }
    return grid;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::GlasseySubcritical: return "GlasseySubcritical";
        case Regime::StraussSubcritical: return "StraussSubcritical";
        case Regime::StraussCritical: return "StraussCritical";
        case Regime::NoBlowupPredicted: return "NoBlowupPredicted";
    }
    return "?";
}

}  // namespace tricomi
