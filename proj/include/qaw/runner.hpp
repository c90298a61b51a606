#pragma once

#include <string>
#include <vector>

#include "qaw/config.hpp"

namespace qaw {

struct RunResult {
    ExperimentConfig config;
    std::vector<std::string> files_written;
    std::vector<std::string> warnings;
    double wall_seconds = 0.0;
};

// Execute a validated config: evolve (records.csv, density_T.csv snapshots,
// eigenpair.json), spectrum (spectrum_gX.csv) or survival_sweep
// (survival_sweep.csv, survival_series.csv). Every run ends with a
// manifest.json that is sufficient to rerun the experiment.
RunResult run_experiment(const ExperimentConfig& config);

// 17-significant-digit, locale-independent formatting used in all outputs.
std::string format_double(double v);

}  // namespace qaw
