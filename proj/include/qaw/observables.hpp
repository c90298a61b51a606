#pragma once

#include <optional>
#include <vector>

#include "qaw/eigensolver.hpp"
#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

// Per-site probabilities; ground/excited marginals sum the first/second half
// of the internal indices. total = ground + excited sitewise.
struct Density {
    Eigen::VectorXd total;
    Eigen::VectorXd ground;
    Eigen::VectorXd excited;

    double sum() const { return total.sum(); }
};

Density probability_density(const WaveFunction& state);

// Density scaled so that the total sums to one. Rejects zero total.
Density normalized_density(const WaveFunction& state);

struct Moments {
    double mean = 0.0;
    double sd = 0.0;
};

// First moment and root central second moment of a normalized per-site
// density along one axis (the density need not be normalized; it is summed
// and divided internally so sector marginals can be passed directly).
Moments moments_along_x(const Eigen::VectorXd& density, const LatticeSpec& lattice);
Moments moments_along_y(const Eigen::VectorXd& density, const LatticeSpec& lattice);

// Probability weight of the normalized density inside x in [x_lo, x_hi].
double survival_probability(const Eigen::VectorXd& normalized_total, const LatticeSpec& lattice,
                            int x_lo, int x_hi);

struct SurvivalRegion {
    int x_lo = 0;
    int x_hi = 0;
};

struct ObservableRecord {
    int step = 0;
    double total_probability = 0.0;
    double mean_x = 0.0, sd_x = 0.0;
    double mean_y = 0.0, sd_y = 0.0;  // 2D only, zero otherwise
    std::optional<double> survival;
    // sector series (1D figures): moments of each marginal renormalized
    // within its sector
    double mean_x_ground = 0.0, sd_x_ground = 0.0;
    double mean_x_excited = 0.0, sd_x_excited = 0.0;
    bool wrap_exposed = false;  // > 1% of probability within 2 sites of the boundary
};

struct DensitySnapshot {
    int step = 0;
    Density density;  // unnormalized
};

struct EvolveOptions {
    int steps = 0;
    std::vector<int> snapshot_steps;
    std::optional<SurvivalRegion> survival;
};

struct EvolveResult {
    std::vector<ObservableRecord> records;    // one per step, including T = 0
    std::vector<DensitySnapshot> snapshots;   // at the requested steps
};

// Apply the one-step operator `steps` times, recording observables every step
// (the T = 0 record describes the initial state). Aborts with BlowupError at
// the first non-finite amplitude.
EvolveResult evolve_and_record(const WaveFunction& initial, const WalkParams& params,
                               const EvolveOptions& options);

// Initial-state preparation: translated eigenvector (and, in 2D, a plane-wave
// boost), normalized to unit norm.
WaveFunction prepare_initial_1d(const EigenPair& pair, int delta_x);
WaveFunction prepare_initial_2d(const EigenPair& pair, int delta_x, int delta_y, double kx,
                                double ky);

}  // namespace qaw
