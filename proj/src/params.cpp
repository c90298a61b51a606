#include "qaw/params.hpp"

#include <cmath>

namespace qaw {

void WalkParams::validate() const {
    if (!std::isfinite(theta0) || !std::isfinite(epsilon) || !std::isfinite(w) ||
        !std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(g))
        throw ConfigError("walk params: all fields must be finite");
    if (std::abs(g) > kMaxGaugeParameter)
        throw ConfigError("walk params: |g| exceeds the supported cap of 20");
}

double theta_piecewise(double theta_ge, double alpha, double beta, double coord) {
    const double lo = (-alpha - 1.0) / beta;
    const double hi = (-alpha + 1.0) / beta;
    if (coord < lo) return theta_ge;
    if (coord > hi) return -theta_ge;
    return theta_ge * (alpha + beta * coord);
}

namespace {

Eigen::VectorXd profile_axis(double theta_ge, double alpha, double beta, int extent, int half) {
    Eigen::VectorXd out(extent);
    for (int i = 0; i < extent; ++i) out[i] = theta_piecewise(theta_ge, alpha, beta, i - half);
    return out;
}

}  // namespace

ThetaProfile theta_profile_1d(const WalkParams& params, const LatticeSpec& lattice) {
    params.validate();
    lattice.validate();
    if (lattice.dimension != 1) throw ConfigError("theta_profile_1d: lattice must be 1D");
    if (params.beta == 0.0) throw ConfigError("theta_profile_1d: beta = 0 leaves the potential region undefined");
    return ThetaProfile{
        profile_axis(params.theta_ground(), params.alpha, params.beta, lattice.extent_x, lattice.half_x()),
        profile_axis(params.theta_excited(), params.alpha, params.beta, lattice.extent_x, lattice.half_x())};
}

ThetaProfile2D theta_profiles_2d(const WalkParams& params, const LatticeSpec& lattice) {
    params.validate();
    lattice.validate();
    if (lattice.dimension != 2) throw ConfigError("theta_profiles_2d: lattice must be 2D");
    if (params.beta == 0.0) throw ConfigError("theta_profiles_2d: beta = 0 leaves the potential region undefined");
    const double tg = params.theta_ground();
    const double te = params.theta_excited();
    return ThetaProfile2D{
        profile_axis(tg, params.alpha, params.beta, lattice.extent_x, lattice.half_x()),
        profile_axis(te, params.alpha, params.beta, lattice.extent_x, lattice.half_x()),
        profile_axis(tg, params.alpha, params.beta, lattice.extent_y, lattice.half_y()),
        profile_axis(te, params.alpha, params.beta, lattice.extent_y, lattice.half_y())};
}

}  // namespace qaw
