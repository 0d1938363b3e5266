#pragma once

#include <span>
#include <string>
#include <vector>

#include "tricomi/exponents.hpp"
#include "tricomi/lifespan.hpp"
#include "tricomi/simulator.hpp"

namespace tricomi {

// Sweep records as CSV with the fixed header
// epsilon,T_measured,threshold,dr,dt_policy (17 significant digits;
// T_measured of "inf" encodes a run that reached T_max, "nan" a failed one).
void write_records_csv(std::span<const LifespanRecord> records,
                       const std::string& path);
std::vector<LifespanRecord> read_records_csv(const std::string& path);

// Field snapshot dump, columns t,r,u,v.
void write_snapshots_csv(const History& history, const std::string& path);

// JSON config mirroring ProblemConfig plus the grid block.
struct RunConfig {
    ProblemConfig problem;
    GridSpec grid;
    double T_max = 10.0;
    double threshold = 1e6;
};

RunConfig read_config_json(const std::string& path);
void write_config_json(const RunConfig& cfg, const std::string& path);
std::string config_hash(const RunConfig& cfg);  // FNV-1a over the canonical form

// Reproducibility sidecar written next to every artifact.
void write_manifest(const RunConfig& cfg, std::span<const std::string> outputs,
                    const std::string& path);

// Region plot: cells colored by regime, with the critical-curve overlays
// (one curve for unequal speeds, both swap branches for equal speeds).
void export_region_plot(const CurveGrid& grid, int N, double m1, double m2,
                        const std::string& path);

// Log-log lifespan plot with the fitted line and the predicted-slope guide.
void export_lifespan_plot(std::span<const LifespanRecord> records,
                          const FitResult& fit, const RegimeReport& report,
                          const std::string& path);

}  // namespace tricomi
