#include "qaw/reference.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qaw/dense.hpp"

namespace qaw {

namespace {

using Eigen::MatrixXcd;
const Complex kI(0.0, 1.0);

MatrixXcd pauli(char which) {
    MatrixXcd m(2, 2);
    switch (which) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, -kI, kI, 0; break;
        case 'z': m << 1, 0, 0, -1; break;
        case 'G': m << 1, 0, 0, 0; break;  // (1 + sigma^z)/2
        case 'E': m << 0, 0, 0, 1; break;  // (1 - sigma^z)/2
        default: m.setIdentity(); break;
    }
    return m;
}

// slowest factor leftmost: upsilon (x) tau (x) sigma in Kronecker order
MatrixXcd internal_product(char sigma, char tau, char upsilon) {
    return Eigen::kroneckerProduct(pauli(upsilon),
                                   Eigen::kroneckerProduct(pauli(tau), pauli(sigma)).eval())
        .eval();
}

MatrixXcd shift_matrix(int extent, int offset) {
    MatrixXcd s = MatrixXcd::Zero(extent, extent);
    for (int i = 0; i < extent; ++i) s(((i + offset) % extent + extent) % extent, i) = 1.0;
    return s;
}

}  // namespace

Eigen::MatrixXcd reference_dense_1d(const WalkParams& params, const LatticeSpec& lattice) {
    params.validate();
    lattice.validate();
    if (lattice.dimension != 1) throw ConfigError("reference_dense_1d: lattice must be 1D");
    if (lattice.state_dim() > kDenseDimensionGuard)
        throw ConfigError("reference_dense_1d: dimension exceeds the dense guard");

    const int lx = lattice.extent_x;
    const ThetaProfile profile = theta_profile_1d(params, lattice);

    MatrixXcd h_nh(4, 4);
    h_nh << -params.epsilon, 0, -params.w * std::exp(-params.g), 0,
            0, -params.epsilon, 0, -params.w * std::exp(-params.g),
            -params.w * std::exp(params.g), 0, params.epsilon, 0,
            0, -params.w * std::exp(params.g), 0, params.epsilon;
    const MatrixXcd n_block = (-kI * h_nh).exp();
    const MatrixXcd n_full = Eigen::kroneckerProduct(MatrixXcd::Identity(lx, lx), n_block).eval();

    MatrixXcd c_full = MatrixXcd::Zero(4 * lx, 4 * lx);
    for (int i = 0; i < lx; ++i) {
        MatrixXcd h_c = MatrixXcd::Zero(4, 4);
        h_c(0, 1) = -kI * profile.theta_g[i];
        h_c(1, 0) = kI * profile.theta_g[i];
        h_c(2, 3) = -kI * profile.theta_e[i];
        h_c(3, 2) = kI * profile.theta_e[i];
        c_full.block(4 * i, 4 * i, 4, 4) = (-kI * h_c).exp();
    }

    MatrixXcd proj_l = MatrixXcd::Zero(4, 4), proj_r = MatrixXcd::Zero(4, 4);
    proj_l(0, 0) = proj_l(2, 2) = 1.0;
    proj_r(1, 1) = proj_r(3, 3) = 1.0;
    const MatrixXcd s_full =
        Eigen::kroneckerProduct(shift_matrix(lx, -1), proj_l).eval() +
        Eigen::kroneckerProduct(shift_matrix(lx, +1), proj_r).eval();

    return s_full * c_full * n_full;
}

Eigen::MatrixXcd reference_dense_2d(const WalkParams& params, const LatticeSpec& lattice) {
    params.validate();
    lattice.validate();
    if (lattice.dimension != 2) throw ConfigError("reference_dense_2d: lattice must be 2D");
    if (lattice.state_dim() > kDenseDimensionGuard)
        throw ConfigError("reference_dense_2d: dimension exceeds the dense guard");

    const int lx = lattice.extent_x, ly = lattice.extent_y;
    const long sites = lattice.num_sites();
    const ThetaProfile2D profile = theta_profiles_2d(params, lattice);

    // N(g): sigma^0 (x) tau^0 (x) pump block
    MatrixXcd pump(2, 2);
    pump << -params.epsilon, -params.w * std::exp(-params.g),
            -params.w * std::exp(params.g), params.epsilon;
    const MatrixXcd h_pump =
        Eigen::kroneckerProduct(pump, Eigen::kroneckerProduct(pauli('0'), pauli('0')).eval()).eval();
    const MatrixXcd n_block = (-kI * h_pump).exp();
    const MatrixXcd n_full =
        Eigen::kroneckerProduct(MatrixXcd::Identity(sites, sites), n_block).eval();

    // coin generators from the Pauli tensor structure
    const MatrixXcd gen_xg = internal_product('y', '0', 'G');
    const MatrixXcd gen_xe = internal_product('y', '0', 'E');
    const MatrixXcd gen_yg = internal_product('x', 'y', 'G');
    const MatrixXcd gen_ye = internal_product('x', 'y', 'E');

    MatrixXcd cx_full = MatrixXcd::Zero(8 * sites, 8 * sites);
    MatrixXcd cy_full = MatrixXcd::Zero(8 * sites, 8 * sites);
    for (long s = 0; s < sites; ++s) {
        const int ix = static_cast<int>(s % lx), iy = static_cast<int>(s / lx);
        const MatrixXcd hx = profile.theta_xg[ix] * gen_xg + profile.theta_xe[ix] * gen_xe;
        const MatrixXcd hy = profile.theta_yg[iy] * gen_yg + profile.theta_ye[iy] * gen_ye;
        cx_full.block(8 * s, 8 * s, 8, 8) = (-kI * hx).exp();
        cy_full.block(8 * s, 8 * s, 8, 8) = (-kI * hy).exp();
    }

    // S_x: |x-a><x| on the sigma^z = +1 (L) projector, |x+a><x| on R
    const MatrixXcd proj_l = internal_product('G', '0', '0');  // (1+sigma^z)/2 in sigma space
    const MatrixXcd proj_r = internal_product('E', '0', '0');
    const MatrixXcd ident_y = MatrixXcd::Identity(ly, ly);
    const MatrixXcd sx_full =
        Eigen::kroneckerProduct(ident_y,
                                Eigen::kroneckerProduct(shift_matrix(lx, -1), proj_l).eval())
            .eval() +
        Eigen::kroneckerProduct(ident_y,
                                Eigen::kroneckerProduct(shift_matrix(lx, +1), proj_r).eval())
            .eval();

    // S_y from the half-sum forms: P_y = (|y-a><y| + |y+a><y|)/2,
    // Q_y = (|y-a><y| - |y+a><y|)/2, laid out as [[P,Q],[Q,P]] on the D pair
    // and [[P,-Q],[-Q,P]] on the U pair of each G/E sector.
    const MatrixXcd y_minus = shift_matrix(ly, -1);
    const MatrixXcd y_plus = shift_matrix(ly, +1);
    const MatrixXcd p_y = 0.5 * (y_minus + y_plus);
    const MatrixXcd q_y = 0.5 * (y_minus - y_plus);
    MatrixXcd block_p = MatrixXcd::Zero(8, 8), block_q = MatrixXcd::Zero(8, 8);
    for (int ge = 0; ge < 2; ++ge) {
        const int b = 4 * ge;
        for (int m = 0; m < 4; ++m) block_p(b + m, b + m) = 1.0;
        block_q(b + 0, b + 1) = 1.0;
        block_q(b + 1, b + 0) = 1.0;
        block_q(b + 2, b + 3) = -1.0;
        block_q(b + 3, b + 2) = -1.0;
    }
    const MatrixXcd ident_x = MatrixXcd::Identity(lx, lx);
    const MatrixXcd sy_full =
        Eigen::kroneckerProduct(p_y, Eigen::kroneckerProduct(ident_x, block_p).eval()).eval() +
        Eigen::kroneckerProduct(q_y, Eigen::kroneckerProduct(ident_x, block_q).eval()).eval();

    return sy_full * cy_full * sx_full * cx_full * n_full;
}

}  // namespace qaw
