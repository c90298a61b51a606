#pragma once

#include <Eigen/Core>

#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

// One-site pump factor exp(-i M) for the traceless block
//   M = [[-eps, -w e^{-g}], [-w e^{+g}, +eps]]
// evaluated in closed form: M^2 = (eps^2 + w^2) I, so with
// lambda = sqrt(eps^2 + w^2),  exp(-i M) = cos(lambda) I - i sinc(lambda) M.
Eigen::Matrix2cd pump_block(double epsilon, double w, double g);

// exp(-i H_NH(g)) on the 1D internal basis {LG, RG, LE, RE}: the 2x2 pump
// block acting on the (G,E) pair within each of the L and R sectors.
Eigen::Matrix4cd pump_step_matrix(const WalkParams& params);

// exp(-i H_C): real rotation by theta_G on the ground (L,R) pair and by
// theta_E on the excited pair.
Eigen::Matrix4cd coin_matrix(double theta_g, double theta_e);

// Matrix-free application of U(g) = S C N(g). Trig tables are precomputed
// once from the profile; apply() and apply_adjoint() are pure in the sense
// that they depend only on the input vector.
class Stepper1D {
  public:
    Stepper1D(const WalkParams& params, const LatticeSpec& lattice, const ThetaProfile& profile);

    const LatticeSpec& lattice() const { return lattice_; }
    const WalkParams& params() const { return params_; }

    // out = U(g) in.  Buffers must be distinct and of size state_dim().
    void apply(const Vector& in, Vector& out) const;
    // out = U(g)^dagger in.
    void apply_adjoint(const Vector& in, Vector& out) const;

  private:
    LatticeSpec lattice_;
    WalkParams params_;
    Eigen::Matrix2cd pump_;
    Eigen::VectorXd cg_, sg_, ce_, se_;
};

// One step of the walk on a wavefunction value; profile and state must live
// on the same lattice.
WaveFunction apply_step_1d(const WaveFunction& state, const WalkParams& params,
                           const ThetaProfile& profile);

}  // namespace qaw
