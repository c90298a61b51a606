#pragma once

#include <Eigen/Core>

#include "qaw/lattice.hpp"

namespace qaw {

// Gauge factors reach exp(|g|); at g = 20 that is ~4.9e8, still safe in
// doubles through downstream products. Larger values are rejected.
inline constexpr double kMaxGaugeParameter = 20.0;

// Scalar parameter set of the walk. theta_g/theta_e are always derived.
struct WalkParams {
    double theta0 = 0.0;
    double epsilon = 0.0;
    double w = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double g = 0.0;

    double theta_ground() const { return theta0 + epsilon; }
    double theta_excited() const { return theta0 - epsilon; }

    void validate() const;

    bool operator==(const WalkParams&) const = default;
};

// Coin-angle value at one coordinate: the constant limbs outside the window
// [(-alpha-1)/beta, (-alpha+1)/beta] and the affine limb inside it.
double theta_piecewise(double theta_ge, double alpha, double beta, double coord);

// Per-site coin angles for the ground and excited sectors.
struct ThetaProfile {
    Eigen::VectorXd theta_g;  // theta_G(x)
    Eigen::VectorXd theta_e;  // theta_E(x)
};

// Per-axis angles for the 2D walk; same piecewise shape on each axis.
struct ThetaProfile2D {
    Eigen::VectorXd theta_xg, theta_xe;  // functions of x
    Eigen::VectorXd theta_yg, theta_ye;  // functions of y
};

ThetaProfile theta_profile_1d(const WalkParams& params, const LatticeSpec& lattice);
ThetaProfile2D theta_profiles_2d(const WalkParams& params, const LatticeSpec& lattice);

}  // namespace qaw
