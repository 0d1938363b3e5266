#include "tricomi/lifespan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tricomi {

FitResult fit_power_law(std::span<const LifespanRecord> records) {
    FitResult fit;
    std::vector<std::pair<double, double>> pts;  // (log eps, log T)
    for (const auto& r : records) {
        if (!r.blew_up || !std::isfinite(r.T_measured) || r.T_measured <= 0.0) {
            fit.excluded.emplace_back(r.epsilon,
                                      r.note.empty() ? "no blow-up" : r.note);
            continue;
        }
        pts.emplace_back(std::log(r.epsilon), std::log(r.T_measured));
    }
    if (pts.size() < 3)
        throw std::invalid_argument("fit_power_law: need at least 3 blow-up records");
    // accumulate in a canonical order so the fit is reordering-invariant
    std::sort(pts.begin(), pts.end());
    const double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double det = n * sxx - sx * sx;
    if (det <= 0.0)
        throw std::invalid_argument("fit_power_law: degenerate epsilon values");
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.n_points = pts.size();
    double ss = 0.0;
    for (auto [x, y] : pts) {
        const double r = y - (fit.intercept + fit.slope * x);
        ss += r * r;
    }
    if (pts.size() > 2)
        fit.stderr_slope = std::sqrt(ss / (n - 2.0) / (sxx - sx * sx / n));
    return fit;
}

ComparisonResult compare_with_prediction(const FitResult& fit,
                                         const RegimeReport& report,
                                         double tol_fraction) {
    ComparisonResult res;
    res.measured_decay = -fit.slope;
    if (report.primary.kind != BoundKind::PowerLaw) {
        res.verdict = Verdict::NotDeskScale;
        res.detail = "primary bound is not a power law (critical or no-blow-up "
                     "regime); exponential lifespans exceed desk scale";
        return res;
    }
    res.predicted_decay = report.primary.exponent;
    std::ostringstream os;
    os << "measured decay " << res.measured_decay << " vs bound "
       << res.predicted_decay << " (tol " << tol_fraction << ")";
    res.detail = os.str();
    if (res.measured_decay <= (1.0 + tol_fraction) * res.predicted_decay)
        res.verdict = Verdict::Pass;
    else
        res.verdict = Verdict::Fail;
    res.sharpness_observed =
        res.measured_decay >= (1.0 - tol_fraction) * res.predicted_decay;
    return res;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotDeskScale: return "NotDeskScale";
    }
    return "?";
}

}  // namespace tricomi
