#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tricomi {

// The Omega curves are only defined for unequal diffusion strengths; callers
// must switch to the Gamma (max-of-swap) forms when m1 == m2.
struct UndefinedForEqualSpeeds : std::domain_error {
    using std::domain_error::domain_error;
};

// Signals the degenerate quadratic (m+2)N == 2, where the critical power
// is infinite (one space dimension, classical wave).
struct InfiniteExponent : std::domain_error {
    using std::domain_error::domain_error;
};

// Closed-form beta fell outside the validity range of the estimate it feeds.
struct OutsideValidRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct ExponentConfig {
    int N = 3;        // spatial dimension, >= 1
    double m1 = 0.0;  // diffusion strength of the u-equation, >= 0
    double m2 = 0.0;  // diffusion strength of the v-equation, >= 0
    double p = 2.0;   // > 1
    double q = 2.0;   // > 1

    void validate() const;
    bool equal_speeds() const { return m1 == m2; }
};

// gamma(m) = (m+2)/2, the degenerate-speed exponent.
double gamma_exponent(double m);

// The two rational curves and their symmetrized/speed-selected variants.
double f_ss(int N, double m, double p, double q);
double gamma_ss(int N, double m, double p, double q);
double f_gg(int N, double m, double p, double q);
double gamma_gg(int N, double m, double p, double q);
double omega_ss(const ExponentConfig& cfg);
double omega_gg(const ExponentConfig& cfg);

// Quadratic gamma_S(N, m, rho) and its positive root rho_S (Strauss-type).
double gamma_s_poly(int N, double m, double rho);
double rho_strauss(int N, double m);

// Conformal exponent, Glassey monomial and its root.
double rho_conf(int N, double m);
double gamma_g(int N, double m, double rho);
double rho_glassey(int N);

// gamma_l(N, m, theta) from the Hoelder bookkeeping of the lower estimate.
double gamma_l(int N, double m, double theta);

// Critical beta choices: the system case (different equations coupled through
// q) and the reduced single-equation case for p == q.
double critical_beta_system(int N, double m1, double q);
double critical_beta_single(int N, double m, double p);

// Propagation envelope max(t^g1/g1, t^g2/g2) bounding the support radius gain.
double propagation_envelope(double m1, double m2, double t);

enum class Regime {
    GlasseySubcritical,
    StraussSubcritical,
    StraussCritical,
    NoBlowupPredicted,
};

enum class BoundKind { PowerLaw, ExpPowerLaw, None };

// One applicable lifespan row: PowerLaw means T <= A eps^{-exponent},
// ExpPowerLaw means T <= exp(A eps^{-exponent}).
struct LifespanBound {
    BoundKind kind = BoundKind::None;
    double exponent = 0.0;
    double curve_value = 0.0;  // value of the curve that produced the row
    std::string curve;         // "omega_gg", "gamma_ss", ...
};

struct RegimeReport {
    double omega_ss = 0.0;  // Gamma_SS when m1 == m2
    double omega_gg = 0.0;  // Gamma_GG when m1 == m2
    bool equal_speeds = false;
    Regime regime = Regime::NoBlowupPredicted;
    LifespanBound primary;
    std::vector<LifespanBound> bounds;  // every applicable row
};

// Classifies (p, q) against the curves and emits every applicable lifespan
// row; the primary row is the tightest upper bound as eps -> 0 (the largest
// curve value among power-law rows, exponential rows only when nothing else
// applies). |curve| <= tol counts as critical.
RegimeReport classify_regime(const ExponentConfig& cfg, double tol = 1e-9);

struct CurveGrid {
    std::vector<double> p_axis;
    std::vector<double> q_axis;
    std::vector<Regime> labels;  // row-major, labels[iq * p_axis.size() + ip]

    Regime at(std::size_t ip, std::size_t iq) const {
        return labels[iq * p_axis.size() + ip];
    }
};

// Log-spaced axis in (lo, hi], suitable defaults for region plots.
std::vector<double> log_axis(double lo, double hi, int n);

// Labels every grid cell via classify_regime. Parallel over cells.
CurveGrid region_sample(int N, double m1, double m2,
                        const std::vector<double>& p_grid,
                        const std::vector<double>& q_grid, double tol = 1e-9);

const char* regime_name(Regime r);

}  // namespace tricomi
