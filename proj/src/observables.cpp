#include "qaw/observables.hpp"

#include <cmath>

#include "qaw/walk1d.hpp"
#include "qaw/walk2d.hpp"

namespace qaw {

Density probability_density(const WaveFunction& state) {
    const LatticeSpec& lat = state.lattice;
    const int idim = lat.internal_dim();
    const int half = idim / 2;
    const long sites = lat.num_sites();
    Density d;
    d.ground = Eigen::VectorXd::Zero(sites);
    d.excited = Eigen::VectorXd::Zero(sites);
    for (long s = 0; s < sites; ++s) {
        const Complex* v = state.amplitudes.data() + s * idim;
        double pg = 0.0, pe = 0.0;
        for (int m = 0; m < half; ++m) pg += std::norm(v[m]);
        for (int m = half; m < idim; ++m) pe += std::norm(v[m]);
        d.ground[s] = pg;
        d.excited[s] = pe;
    }
    d.total = d.ground + d.excited;
    return d;
}

Density normalized_density(const WaveFunction& state) {
    Density d = probability_density(state);
    const double total = d.total.sum();
    if (!(total > 0.0)) throw ConfigError("normalized_density: total probability is not positive");
    d.total /= total;
    d.ground /= total;
    d.excited /= total;
    return d;
}

namespace {

Moments moments_over_coords(const Eigen::VectorXd& marginal, int extent, int half) {
    const double w = marginal.sum();
    Moments m;
    if (!(w > 0.0)) return m;
    double mean = 0.0;
    for (int i = 0; i < extent; ++i) mean += (i - half) * marginal[i];
    mean /= w;
    double var = 0.0;
    for (int i = 0; i < extent; ++i) {
        const double d = (i - half) - mean;
        var += d * d * marginal[i];
    }
    m.mean = mean;
    m.sd = std::sqrt(var / w);
    return m;
}

}  // namespace

Moments moments_along_x(const Eigen::VectorXd& density, const LatticeSpec& lattice) {
    if (lattice.dimension == 1) return moments_over_coords(density, lattice.extent_x, lattice.half_x());
    Eigen::VectorXd marginal = Eigen::VectorXd::Zero(lattice.extent_x);
    for (long s = 0; s < lattice.num_sites(); ++s)
        marginal[s % lattice.extent_x] += density[s];
    return moments_over_coords(marginal, lattice.extent_x, lattice.half_x());
}

Moments moments_along_y(const Eigen::VectorXd& density, const LatticeSpec& lattice) {
    if (lattice.dimension != 2) throw ConfigError("moments_along_y: 2D lattices only");
    Eigen::VectorXd marginal = Eigen::VectorXd::Zero(lattice.extent_y);
    for (long s = 0; s < lattice.num_sites(); ++s)
        marginal[s / lattice.extent_x] += density[s];
    return moments_over_coords(marginal, lattice.extent_y, lattice.half_y());
}

double survival_probability(const Eigen::VectorXd& normalized_total, const LatticeSpec& lattice,
                            int x_lo, int x_hi) {
    if (lattice.dimension != 1) throw ConfigError("survival_probability: 1D densities only");
    if (x_lo > x_hi) throw ConfigError("survival_probability: empty region");
    if (x_lo < -lattice.half_x() || x_hi > lattice.half_x())
        throw ConfigError("survival_probability: region outside the lattice");
    double s = 0.0;
    for (int x = x_lo; x <= x_hi; ++x) s += normalized_total[lattice.site_index(x)];
    return s;
}

namespace {

bool wrap_exposure(const Eigen::VectorXd& normalized_total, const LatticeSpec& lattice) {
    // flag when more than 1% of probability sits within 2 sites of the boundary
    double edge = 0.0;
    if (lattice.dimension == 1) {
        const int lx = lattice.extent_x;
        for (int i = 0; i < lx; ++i)
            if (i < 2 || i >= lx - 2) edge += normalized_total[i];
    } else {
        const int lx = lattice.extent_x, ly = lattice.extent_y;
        for (long s = 0; s < lattice.num_sites(); ++s) {
            const int ix = static_cast<int>(s % lx), iy = static_cast<int>(s / lx);
            if (ix < 2 || ix >= lx - 2 || iy < 2 || iy >= ly - 2) edge += normalized_total[s];
        }
    }
    return edge > 0.01;
}

ObservableRecord make_record(int step, const WaveFunction& state,
                             const std::optional<SurvivalRegion>& region) {
    Density d = probability_density(state);
    const double total = d.sum();
    if (!(total > 0.0) || !std::isfinite(total))
        throw BlowupError("evolution produced a non-finite or vanishing state", step);

    ObservableRecord rec;
    rec.step = step;
    rec.total_probability = total;
    Eigen::VectorXd normalized = d.total / total;
    const Moments mx = moments_along_x(normalized, state.lattice);
    rec.mean_x = mx.mean;
    rec.sd_x = mx.sd;
    if (state.lattice.dimension == 2) {
        const Moments my = moments_along_y(normalized, state.lattice);
        rec.mean_y = my.mean;
        rec.sd_y = my.sd;
    }
    if (region) rec.survival = survival_probability(normalized, state.lattice, region->x_lo, region->x_hi);
    if (state.lattice.dimension == 1) {
        const Moments mg = moments_along_x(d.ground, state.lattice);
        const Moments me = moments_along_x(d.excited, state.lattice);
        rec.mean_x_ground = mg.mean;
        rec.sd_x_ground = mg.sd;
        rec.mean_x_excited = me.mean;
        rec.sd_x_excited = me.sd;
    }
    rec.wrap_exposed = wrap_exposure(normalized, state.lattice);
    return rec;
}

}  // namespace

EvolveResult evolve_and_record(const WaveFunction& initial, const WalkParams& params,
                               const EvolveOptions& options) {
    if (options.steps < 0) throw ConfigError("evolve_and_record: steps must be non-negative");
    const LatticeSpec& lat = initial.lattice;

    EvolveResult result;
    result.records.reserve(options.steps + 1);
    auto want_snapshot = [&](int step) {
        return std::find(options.snapshot_steps.begin(), options.snapshot_steps.end(), step) !=
               options.snapshot_steps.end();
    };

    WaveFunction state = initial;
    result.records.push_back(make_record(0, state, options.survival));
    if (want_snapshot(0)) result.snapshots.push_back({0, probability_density(state)});

    Vector next(lat.state_dim());
    if (lat.dimension == 1) {
        Stepper1D stepper(params, lat, theta_profile_1d(params, lat));
        for (int t = 1; t <= options.steps; ++t) {
            stepper.apply(state.amplitudes, next);
            state.amplitudes.swap(next);
            result.records.push_back(make_record(t, state, options.survival));
            if (want_snapshot(t)) result.snapshots.push_back({t, probability_density(state)});
        }
    } else {
        Stepper2D stepper(params, lat, theta_profiles_2d(params, lat));
        for (int t = 1; t <= options.steps; ++t) {
            stepper.apply(state.amplitudes, next);
            state.amplitudes.swap(next);
            result.records.push_back(make_record(t, state, options.survival));
            if (want_snapshot(t)) result.snapshots.push_back({t, probability_density(state)});
        }
    }
    return result;
}

WaveFunction prepare_initial_1d(const EigenPair& pair, int delta_x) {
    WaveFunction state = translate(pair.right_vector, delta_x);
    state.amplitudes /= state.amplitudes.norm();
    return state;
}

WaveFunction prepare_initial_2d(const EigenPair& pair, int delta_x, int delta_y, double kx,
                                double ky) {
    WaveFunction state = translate(pair.right_vector, delta_x, delta_y);
    state = apply_plane_wave(state, kx, ky);
    state.amplitudes /= state.amplitudes.norm();
    return state;
}

}  // namespace qaw
