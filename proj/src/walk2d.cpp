#include "qaw/walk2d.hpp"

#include <cmath>

#include "qaw/walk1d.hpp"

namespace qaw {

Matrix8cd pump_step_matrix_2d(const WalkParams& params) {
    params.validate();
    const Eigen::Matrix2cd p = pump_block(params.epsilon, params.w, params.g);
    Matrix8cd out = Matrix8cd::Zero();
    for (int m = 0; m < 4; ++m) {
        out(m, m) = p(0, 0);
        out(m, m + 4) = p(0, 1);
        out(m + 4, m) = p(1, 0);
        out(m + 4, m + 4) = p(1, 1);
    }
    return out;
}

Matrix8cd coin_x_matrix(double theta_xg, double theta_xe) {
    Matrix8cd out = Matrix8cd::Zero();
    const double angles[2] = {theta_xg, theta_xe};
    for (int ge = 0; ge < 2; ++ge) {
        const double c = std::cos(angles[ge]), s = std::sin(angles[ge]);
        for (int du = 0; du < 2; ++du) {
            const int b = 4 * ge + 2 * du;
            out(b, b) = c;
            out(b, b + 1) = -s;
            out(b + 1, b) = s;
            out(b + 1, b + 1) = c;
        }
    }
    return out;
}

Matrix8cd coin_y_matrix(double theta_yg, double theta_ye) {
    Matrix8cd out = Matrix8cd::Zero();
    const double angles[2] = {theta_yg, theta_ye};
    for (int ge = 0; ge < 2; ++ge) {
        const double c = std::cos(angles[ge]), s = std::sin(angles[ge]);
        const int b = 4 * ge;
        // mixes LD <-> RU and RD <-> LU
        out(b + 0, b + 0) = c; out(b + 0, b + 3) = -s;
        out(b + 1, b + 1) = c; out(b + 1, b + 2) = -s;
        out(b + 2, b + 1) = s; out(b + 2, b + 2) = c;
        out(b + 3, b + 0) = s; out(b + 3, b + 3) = c;
    }
    return out;
}

// P_y + Q_y = |y-a><y| and P_y - Q_y = |y+a><y| resolve the printed blocks
//   [[P, Q], [Q, P]]   (D/U "down" pair)    [[P, -Q], [-Q, P]]  ("up" pair)
// into one matrix per landing site.
Matrix8cd shift_y_block_minus() {
    Matrix8cd out = Matrix8cd::Zero();
    for (int ge = 0; ge < 2; ++ge) {
        const int b = 4 * ge;
        out(b + 0, b + 0) = 0.5; out(b + 0, b + 1) = 0.5;
        out(b + 1, b + 0) = 0.5; out(b + 1, b + 1) = 0.5;
        out(b + 2, b + 2) = 0.5; out(b + 2, b + 3) = -0.5;
        out(b + 3, b + 2) = -0.5; out(b + 3, b + 3) = 0.5;
    }
    return out;
}

Matrix8cd shift_y_block_plus() {
    Matrix8cd out = Matrix8cd::Zero();
    for (int ge = 0; ge < 2; ++ge) {
        const int b = 4 * ge;
        out(b + 0, b + 0) = 0.5; out(b + 0, b + 1) = -0.5;
        out(b + 1, b + 0) = -0.5; out(b + 1, b + 1) = 0.5;
        out(b + 2, b + 2) = 0.5; out(b + 2, b + 3) = 0.5;
        out(b + 3, b + 2) = 0.5; out(b + 3, b + 3) = 0.5;
    }
    return out;
}

namespace {

void require_2d(const WaveFunction& state, const char* who) {
    if (state.lattice.dimension != 2) throw ConfigError(std::string(who) + ": 2D states only");
}

}  // namespace

WaveFunction apply_shift_x(const WaveFunction& state) {
    require_2d(state, "apply_shift_x");
    const int lx = state.lattice.extent_x, ly = state.lattice.extent_y;
    WaveFunction out(state.lattice);
    for (int iy = 0; iy < ly; ++iy) {
        for (int ix = 0; ix < lx; ++ix) {
            const long src = (static_cast<long>(iy) * lx + ix) * 8;
            const long dl = (static_cast<long>(iy) * lx + (ix == 0 ? lx - 1 : ix - 1)) * 8;
            const long dr = (static_cast<long>(iy) * lx + (ix == lx - 1 ? 0 : ix + 1)) * 8;
            for (int m = 0; m < 8; m += 2) out.amplitudes[dl + m] = state.amplitudes[src + m];
            for (int m = 1; m < 8; m += 2) out.amplitudes[dr + m] = state.amplitudes[src + m];
        }
    }
    return out;
}

WaveFunction apply_shift_y(const WaveFunction& state) {
    require_2d(state, "apply_shift_y");
    const int lx = state.lattice.extent_x, ly = state.lattice.extent_y;
    WaveFunction out(state.lattice);
    for (int iy = 0; iy < ly; ++iy) {
        const long rd = static_cast<long>(iy == 0 ? ly - 1 : iy - 1) * lx;
        const long ru = static_cast<long>(iy == ly - 1 ? 0 : iy + 1) * lx;
        for (int ix = 0; ix < lx; ++ix) {
            const Complex* v = state.amplitudes.data() + (static_cast<long>(iy) * lx + ix) * 8;
            Complex* od = out.amplitudes.data() + (rd + ix) * 8;
            Complex* ou = out.amplitudes.data() + (ru + ix) * 8;
            for (int b = 0; b < 8; b += 4) {
                const Complex ad = 0.5 * (v[b + 0] + v[b + 1]);
                const Complex bd = 0.5 * (v[b + 0] - v[b + 1]);
                od[b + 0] += ad; od[b + 1] += ad;
                ou[b + 0] += bd; ou[b + 1] -= bd;
                const Complex au = 0.5 * (v[b + 2] - v[b + 3]);
                const Complex bu = 0.5 * (v[b + 2] + v[b + 3]);
                od[b + 2] += au; od[b + 3] -= au;
                ou[b + 2] += bu; ou[b + 3] += bu;
            }
        }
    }
    return out;
}

Stepper2D::Stepper2D(const WalkParams& params, const LatticeSpec& lattice,
                     const ThetaProfile2D& profile)
    : lattice_(lattice), params_(params) {
    params.validate();
    lattice.validate();
    if (lattice.dimension != 2) throw ConfigError("Stepper2D: lattice must be 2D");
    if (profile.theta_xg.size() != lattice.extent_x || profile.theta_yg.size() != lattice.extent_y)
        throw ConfigError("Stepper2D: profile does not match the lattice");
    pump_ = pump_block(params.epsilon, params.w, params.g);
    cxg_ = profile.theta_xg.array().cos();
    sxg_ = profile.theta_xg.array().sin();
    cxe_ = profile.theta_xe.array().cos();
    sxe_ = profile.theta_xe.array().sin();
    cyg_ = profile.theta_yg.array().cos();
    syg_ = profile.theta_yg.array().sin();
    cye_ = profile.theta_ye.array().cos();
    sye_ = profile.theta_ye.array().sin();
}

void Stepper2D::apply(const Vector& in, Vector& out) const {
    const int lx = lattice_.extent_x, ly = lattice_.extent_y;
    const long n = lattice_.state_dim();
    Vector mid(n);
    out.resize(n);
    const Complex p00 = pump_(0, 0), p01 = pump_(0, 1), p10 = pump_(1, 0), p11 = pump_(1, 1);

    // pass 1: N(g), C_x, S_x
    for (int iy = 0; iy < ly; ++iy) {
        const long row = static_cast<long>(iy) * lx;
        for (int ix = 0; ix < lx; ++ix) {
            const Complex* v = in.data() + (row + ix) * 8;
            Complex t[8];
            for (int m = 0; m < 4; ++m) {
                t[m] = p00 * v[m] + p01 * v[m + 4];
                t[m + 4] = p10 * v[m] + p11 * v[m + 4];
            }
            const double cg = cxg_[ix], sg = sxg_[ix], ce = cxe_[ix], se = sxe_[ix];
            Complex c[8];
            c[0] = cg * t[0] - sg * t[1]; c[1] = sg * t[0] + cg * t[1];
            c[2] = cg * t[2] - sg * t[3]; c[3] = sg * t[2] + cg * t[3];
            c[4] = ce * t[4] - se * t[5]; c[5] = se * t[4] + ce * t[5];
            c[6] = ce * t[6] - se * t[7]; c[7] = se * t[6] + ce * t[7];
            Complex* ol = mid.data() + (row + (ix == 0 ? lx - 1 : ix - 1)) * 8;
            Complex* orr = mid.data() + (row + (ix == lx - 1 ? 0 : ix + 1)) * 8;
            ol[0] = c[0]; orr[1] = c[1]; ol[2] = c[2]; orr[3] = c[3];
            ol[4] = c[4]; orr[5] = c[5]; ol[6] = c[6]; orr[7] = c[7];
        }
    }

    // pass 2: C_y, S_y
    out.setZero();
    for (int iy = 0; iy < ly; ++iy) {
        const long row = static_cast<long>(iy) * lx;
        const long rd = static_cast<long>(iy == 0 ? ly - 1 : iy - 1) * lx;
        const long ru = static_cast<long>(iy == ly - 1 ? 0 : iy + 1) * lx;
        const double cg = cyg_[iy], sg = syg_[iy], ce = cye_[iy], se = sye_[iy];
        for (int ix = 0; ix < lx; ++ix) {
            const Complex* v = mid.data() + (row + ix) * 8;
            Complex d[8];
            d[0] = cg * v[0] - sg * v[3]; d[3] = sg * v[0] + cg * v[3];
            d[1] = cg * v[1] - sg * v[2]; d[2] = sg * v[1] + cg * v[2];
            d[4] = ce * v[4] - se * v[7]; d[7] = se * v[4] + ce * v[7];
            d[5] = ce * v[5] - se * v[6]; d[6] = se * v[5] + ce * v[6];
            Complex* od = out.data() + (rd + ix) * 8;
            Complex* ou = out.data() + (ru + ix) * 8;
            for (int b = 0; b < 8; b += 4) {
                const Complex ad = 0.5 * (d[b + 0] + d[b + 1]);
                const Complex bd = 0.5 * (d[b + 0] - d[b + 1]);
                od[b + 0] += ad; od[b + 1] += ad;
                ou[b + 0] += bd; ou[b + 1] -= bd;
                const Complex au = 0.5 * (d[b + 2] - d[b + 3]);
                const Complex bu = 0.5 * (d[b + 2] + d[b + 3]);
                od[b + 2] += au; od[b + 3] -= au;
                ou[b + 2] += bu; ou[b + 3] += bu;
            }
        }
    }
}

void Stepper2D::apply_adjoint(const Vector& in, Vector& out) const {
    const int lx = lattice_.extent_x, ly = lattice_.extent_y;
    const long n = lattice_.state_dim();
    Vector mid(n);
    out.resize(n);
    const Complex q00 = std::conj(pump_(0, 0)), q01 = std::conj(pump_(1, 0));
    const Complex q10 = std::conj(pump_(0, 1)), q11 = std::conj(pump_(1, 1));

    // pass 1: S_y^dagger (gather), C_y^dagger
    for (int iy = 0; iy < ly; ++iy) {
        const long row = static_cast<long>(iy) * lx;
        const long rd = static_cast<long>(iy == 0 ? ly - 1 : iy - 1) * lx;
        const long ru = static_cast<long>(iy == ly - 1 ? 0 : iy + 1) * lx;
        const double cg = cyg_[iy], sg = syg_[iy], ce = cye_[iy], se = sye_[iy];
        for (int ix = 0; ix < lx; ++ix) {
            const Complex* fd = in.data() + (rd + ix) * 8;
            const Complex* fu = in.data() + (ru + ix) * 8;
            Complex d[8];
            for (int b = 0; b < 8; b += 4) {
                const Complex ad = 0.5 * (fd[b + 0] + fd[b + 1]);
                const Complex bd = 0.5 * (fu[b + 0] - fu[b + 1]);
                d[b + 0] = ad + bd;
                d[b + 1] = ad - bd;
                const Complex au = 0.5 * (fd[b + 2] - fd[b + 3]);
                const Complex bu = 0.5 * (fu[b + 2] + fu[b + 3]);
                d[b + 2] = au + bu;
                d[b + 3] = -au + bu;
            }
            Complex* o = mid.data() + (row + ix) * 8;
            o[0] = cg * d[0] + sg * d[3]; o[3] = -sg * d[0] + cg * d[3];
            o[1] = cg * d[1] + sg * d[2]; o[2] = -sg * d[1] + cg * d[2];
            o[4] = ce * d[4] + se * d[7]; o[7] = -se * d[4] + ce * d[7];
            o[5] = ce * d[5] + se * d[6]; o[6] = -se * d[5] + ce * d[6];
        }
    }

    // pass 2: S_x^dagger (gather), C_x^dagger, N(g)^dagger
    for (int iy = 0; iy < ly; ++iy) {
        const long row = static_cast<long>(iy) * lx;
        for (int ix = 0; ix < lx; ++ix) {
            const Complex* vl = mid.data() + (row + (ix == 0 ? lx - 1 : ix - 1)) * 8;
            const Complex* vr = mid.data() + (row + (ix == lx - 1 ? 0 : ix + 1)) * 8;
            Complex a[8];
            a[0] = vl[0]; a[2] = vl[2]; a[4] = vl[4]; a[6] = vl[6];
            a[1] = vr[1]; a[3] = vr[3]; a[5] = vr[5]; a[7] = vr[7];
            const double cg = cxg_[ix], sg = sxg_[ix], ce = cxe_[ix], se = sxe_[ix];
            Complex b[8];
            b[0] = cg * a[0] + sg * a[1]; b[1] = -sg * a[0] + cg * a[1];
            b[2] = cg * a[2] + sg * a[3]; b[3] = -sg * a[2] + cg * a[3];
            b[4] = ce * a[4] + se * a[5]; b[5] = -se * a[4] + ce * a[5];
            b[6] = ce * a[6] + se * a[7]; b[7] = -se * a[6] + ce * a[7];
            Complex* o = out.data() + (row + ix) * 8;
            for (int m = 0; m < 4; ++m) {
                o[m] = q00 * b[m] + q01 * b[m + 4];
                o[m + 4] = q10 * b[m] + q11 * b[m + 4];
            }
        }
    }
}

WaveFunction apply_step_2d(const WaveFunction& state, const WalkParams& params,
                           const ThetaProfile2D& profile) {
    Stepper2D stepper(params, state.lattice, profile);
    WaveFunction out(state.lattice);
    stepper.apply(state.amplitudes, out.amplitudes);
    return out;
}

}  // namespace qaw
