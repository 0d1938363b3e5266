#pragma once

#include <span>
#include <string>
#include <vector>

#include "tricomi/exponents.hpp"
#include "tricomi/simulator.hpp"

namespace tricomi {

struct FitResult {
    double slope = 0.0;      // d(log T)/d(log eps), negative in blow-up regimes
    double intercept = 0.0;  // log T at log eps = 0
    double stderr_slope = 0.0;
    std::size_t n_points = 0;
    std::vector<std::pair<double, std::string>> excluded;  // (epsilon, reason)
};

// Least-squares fit of log T against log eps over the blow-up records.
// Needs at least three usable points.
FitResult fit_power_law(std::span<const LifespanRecord> records);

enum class Verdict { Pass, Fail, NotDeskScale };

struct ComparisonResult {
    Verdict verdict = Verdict::NotDeskScale;
    bool sharpness_observed = false;
    double measured_decay = 0.0;   // -slope
    double predicted_decay = 0.0;  // 1/Omega for the primary power-law row
    std::string detail;
};

// Upper-bound semantics: the theorem forbids lifespans decaying slower than
// eps^{-1/Omega}, so PASS means -slope <= (1+tol) * (1/Omega). Matching the
// bound from below is only flagged (the paper proves no lower bounds).
// Exponential (critical) regimes are NotDeskScale.
ComparisonResult compare_with_prediction(const FitResult& fit,
                                         const RegimeReport& report,
                                         double tol_fraction);

const char* verdict_name(Verdict v);

}  // namespace tricomi
