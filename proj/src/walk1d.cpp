#include "qaw/walk1d.hpp"

#include <cmath>

namespace qaw {

Eigen::Matrix2cd pump_block(double epsilon, double w, double g) {
    Eigen::Matrix2cd m;
    m << -epsilon, -w * std::exp(-g), -w * std::exp(g), epsilon;
    const double lambda = std::hypot(epsilon, w);
    // sinc(lambda) -> 1 as lambda -> 0
    const double sinc = lambda > 0.0 ? std::sin(lambda) / lambda : 1.0;
    return std::cos(lambda) * Eigen::Matrix2cd::Identity() - Complex(0.0, 1.0) * sinc * m;
}

Eigen::Matrix4cd pump_step_matrix(const WalkParams& params) {
    params.validate();
    const Eigen::Matrix2cd p = pump_block(params.epsilon, params.w, params.g);
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int lr = 0; lr < 2; ++lr) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                out(internal_index_1d(lr, a), internal_index_1d(lr, b)) = p(a, b);
    }
    return out;
}

Eigen::Matrix4cd coin_matrix(double theta_g, double theta_e) {
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    const double cg = std::cos(theta_g), sg = std::sin(theta_g);
    const double ce = std::cos(theta_e), se = std::sin(theta_e);
    out(0, 0) = cg; out(0, 1) = -sg; out(1, 0) = sg; out(1, 1) = cg;
    out(2, 2) = ce; out(2, 3) = -se; out(3, 2) = se; out(3, 3) = ce;
    return out;
}

Stepper1D::Stepper1D(const WalkParams& params, const LatticeSpec& lattice,
                     const ThetaProfile& profile)
    : lattice_(lattice), params_(params) {
    params.validate();
    lattice.validate();
    if (lattice.dimension != 1) throw ConfigError("Stepper1D: lattice must be 1D");
    if (profile.theta_g.size() != lattice.extent_x || profile.theta_e.size() != lattice.extent_x)
        throw ConfigError("Stepper1D: profile does not match the lattice");
    pump_ = pump_block(params.epsilon, params.w, params.g);
    cg_ = profile.theta_g.array().cos();
    sg_ = profile.theta_g.array().sin();
    ce_ = profile.theta_e.array().cos();
    se_ = profile.theta_e.array().sin();
}

void Stepper1D::apply(const Vector& in, Vector& out) const {
    const int lx = lattice_.extent_x;
    out.resize(4 * lx);
    const Complex p00 = pump_(0, 0), p01 = pump_(0, 1), p10 = pump_(1, 0), p11 = pump_(1, 1);
    for (int x = 0; x < lx; ++x) {
        const Complex* v = in.data() + 4 * x;
        // pump on (G,E) pairs (0,2) and (1,3)
        const Complex n0 = p00 * v[0] + p01 * v[2];
        const Complex n1 = p00 * v[1] + p01 * v[3];
        const Complex n2 = p10 * v[0] + p11 * v[2];
        const Complex n3 = p10 * v[1] + p11 * v[3];
        // coin on (L,R) pairs
        const double cg = cg_[x], sg = sg_[x], ce = ce_[x], se = se_[x];
        const Complex c0 = cg * n0 - sg * n1;
        const Complex c1 = sg * n0 + cg * n1;
        const Complex c2 = ce * n2 - se * n3;
        const Complex c3 = se * n2 + ce * n3;
        // shift: L components to x-1, R components to x+1
        const int xl = x == 0 ? lx - 1 : x - 1;
        const int xr = x == lx - 1 ? 0 : x + 1;
        out[4 * xl + 0] = c0;
        out[4 * xr + 1] = c1;
        out[4 * xl + 2] = c2;
        out[4 * xr + 3] = c3;
    }
}

void Stepper1D::apply_adjoint(const Vector& in, Vector& out) const {
    const int lx = lattice_.extent_x;
    out.resize(4 * lx);
    const Complex q00 = std::conj(pump_(0, 0)), q01 = std::conj(pump_(1, 0));
    const Complex q10 = std::conj(pump_(0, 1)), q11 = std::conj(pump_(1, 1));
    for (int x = 0; x < lx; ++x) {
        // S^dagger: gather L components from x-1, R components from x+1
        const int xl = x == 0 ? lx - 1 : x - 1;
        const int xr = x == lx - 1 ? 0 : x + 1;
        const Complex a0 = in[4 * xl + 0];
        const Complex a1 = in[4 * xr + 1];
        const Complex a2 = in[4 * xl + 2];
        const Complex a3 = in[4 * xr + 3];
        // coin transpose (rotation by -theta)
        const double cg = cg_[x], sg = sg_[x], ce = ce_[x], se = se_[x];
        const Complex b0 = cg * a0 + sg * a1;
        const Complex b1 = -sg * a0 + cg * a1;
        const Complex b2 = ce * a2 + se * a3;
        const Complex b3 = -se * a2 + ce * a3;
        // pump adjoint on (G,E) pairs
        Complex* o = out.data() + 4 * x;
        o[0] = q00 * b0 + q01 * b2;
        o[2] = q10 * b0 + q11 * b2;
        o[1] = q00 * b1 + q01 * b3;
        o[3] = q10 * b1 + q11 * b3;
    }
}

WaveFunction apply_step_1d(const WaveFunction& state, const WalkParams& params,
                           const ThetaProfile& profile) {
    if (profile.theta_g.size() != state.lattice.extent_x)
        throw ConfigError("apply_step_1d: profile and state lattices differ");
    Stepper1D stepper(params, state.lattice, profile);
    WaveFunction out(state.lattice);
    stepper.apply(state.amplitudes, out.amplitudes);
    return out;
}

}  // namespace qaw
