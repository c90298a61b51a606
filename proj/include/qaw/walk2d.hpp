#pragma once

#include <Eigen/Core>

#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

using Matrix8cd = Eigen::Matrix<Complex, 8, 8>;

// exp(-i H_NH(g)) on the 2D internal basis: the same (G,E) pump block
// replicated over the four direction sectors, i.e. acting on index pairs
// (m, m+4) for m = 0..3.
Matrix8cd pump_step_matrix_2d(const WalkParams& params);

// C_x(x): rotation within the (L,R) pairs of every (D/U, G/E) sector,
// theta_xG on the ground half, theta_xE on the excited half.
Matrix8cd coin_x_matrix(double theta_xg, double theta_xe);

// C_y(y): rotation mixing the (LD <-> RU) and (RD <-> LU) pairs within each
// G/E sector.
Matrix8cd coin_y_matrix(double theta_yg, double theta_ye);

// Per-site factors of S_y = sum_y |y-a><y| (x) B_minus + |y+a><y| (x) B_plus,
// obtained by resolving the printed half-sum blocks P_y +- Q_y into pure
// one-site shifts. Exposed for dense assembly and block tests.
Matrix8cd shift_y_block_minus();  // multiplies what lands on y-1
Matrix8cd shift_y_block_plus();   // multiplies what lands on y+1

// S_x on a state: L components to x-1, R components to x+1 (all sectors).
WaveFunction apply_shift_x(const WaveFunction& state);
// S_y on a state: the sign-mixed one-site shifts along y.
WaveFunction apply_shift_y(const WaveFunction& state);

// Matrix-free application of U(g) = S_y C_y S_x C_x N(g).
class Stepper2D {
  public:
    Stepper2D(const WalkParams& params, const LatticeSpec& lattice, const ThetaProfile2D& profile);

    const LatticeSpec& lattice() const { return lattice_; }
    const WalkParams& params() const { return params_; }

    void apply(const Vector& in, Vector& out) const;
    void apply_adjoint(const Vector& in, Vector& out) const;

  private:
    LatticeSpec lattice_;
    WalkParams params_;
    Eigen::Matrix2cd pump_;
    Eigen::VectorXd cxg_, sxg_, cxe_, sxe_;  // over x
    Eigen::VectorXd cyg_, syg_, cye_, sye_;  // over y
};

WaveFunction apply_step_2d(const WaveFunction& state, const WalkParams& params,
                           const ThetaProfile2D& profile);

}  // namespace qaw
