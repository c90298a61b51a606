#include "qaw/eigensolver.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "qaw/walk1d.hpp"
#include "qaw/walk2d.hpp"

namespace qaw {

long minres_hermitian(const std::function<void(const Vector&, Vector&)>& apply, const Vector& rhs,
                      Vector& x, int max_iterations, double rtol) {
    const long n = rhs.size();
    x = Vector::Zero(n);
    const double beta1 = rhs.norm();
    if (beta1 == 0.0) return 0;

    Vector v_prev = Vector::Zero(n);
    Vector v = rhs / beta1;
    Vector p(n);
    Vector w = Vector::Zero(n), w_prev = Vector::Zero(n), w_next(n);
    double beta = beta1;
    double c_old = -1.0, s_old = 0.0;
    double dbar = 0.0, eps_prev = 0.0;
    double phibar = beta1;

    long iterations = 0;
    for (int k = 0; k < max_iterations; ++k) {
        apply(v, p);
        const double alpha = std::real(v.dot(p));  // Eigen dot conjugates the left argument
        p -= alpha * v + beta * v_prev;
        const double beta_next = p.norm();

        const double delta = c_old * dbar + s_old * alpha;
        const double gbar = s_old * dbar - c_old * alpha;
        const double eps = s_old * beta_next;
        const double dbar_next = -c_old * beta_next;
        double gamma = std::hypot(gbar, beta_next);
        if (gamma == 0.0) gamma = 1e-300;
        const double c = gbar / gamma;
        const double s = beta_next / gamma;
        const double phi = c * phibar;
        phibar = s * phibar;

        w_next = (v - delta * w - eps_prev * w_prev) / gamma;
        x += phi * w_next;
        w_prev.swap(w);
        w.swap(w_next);
        eps_prev = eps;

        ++iterations;
        if (beta_next <= 1e-290) break;  // invariant subspace reached
        v_prev.swap(v);
        v = p / beta_next;
        beta = beta_next;
        c_old = c;
        s_old = s;
        dbar = dbar_next;
        if (phibar <= rtol * beta1) break;
    }
    return iterations;
}

namespace {

// Type-erased one-step operator with apply counting.
struct StepOperator {
    std::function<void(const Vector&, Vector&)> forward;
    std::function<void(const Vector&, Vector&)> adjoint;
    mutable long applies = 0;

    void u(const Vector& in, Vector& out) const {
        forward(in, out);
        ++applies;
    }
    void u_dagger(const Vector& in, Vector& out) const {
        adjoint(in, out);
        ++applies;
    }
};

Vector random_unit_vector(long n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Vector v(n);
    for (long i = 0; i < n; ++i) v[i] = Complex(dist(rng), dist(rng));
    v /= v.norm();
    return v;
}

// Orthonormalize v against the columns of basis (modified Gram-Schmidt, two
// sweeps); returns false when nothing of v survives.
bool orthonormalize_against(std::vector<Vector>& basis, Vector& v) {
    for (int sweep = 0; sweep < 2; ++sweep)
        for (const Vector& q : basis) v -= q.dot(v) * q;
    const double nm = v.norm();
    if (nm < 1e-10) return false;
    v /= nm;
    return true;
}

struct RitzOutcome {
    Complex value;
    Vector vector;
    double residual;
    double distance;
};

// Rayleigh-Ritz with U on the current basis; returns the Ritz pair whose
// value is closest to the target, with its true residual.
RitzOutcome rayleigh_ritz(const StepOperator& op, const std::vector<Vector>& basis,
                          Complex target, Vector& scratch) {
    const int k = static_cast<int>(basis.size());
    Eigen::MatrixXcd h(k, k);
    std::vector<Vector> images(k);
    for (int j = 0; j < k; ++j) {
        op.u(basis[j], scratch);
        images[j] = scratch;
        for (int i = 0; i < k; ++i) h(i, j) = basis[i].dot(images[j]);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h, /*computeEigenvectors=*/true);
    int best = 0;
    for (int j = 1; j < k; ++j)
        if (std::abs(es.eigenvalues()[j] - target) < std::abs(es.eigenvalues()[best] - target))
            best = j;

    RitzOutcome out;
    out.value = es.eigenvalues()[best];
    out.vector = Vector::Zero(basis[0].size());
    Vector image = Vector::Zero(basis[0].size());
    for (int j = 0; j < k; ++j) {
        out.vector += es.eigenvectors()(j, best) * basis[j];
        image += es.eigenvectors()(j, best) * images[j];
    }
    const double nm = out.vector.norm();
    out.vector /= nm;
    image /= nm;
    out.residual = (image - out.value * out.vector).norm();
    out.distance = std::abs(out.value - target);
    return out;
}

}  // namespace

EigenPair find_eigenpair(const WalkParams& params, const LatticeSpec& lattice, Complex target,
                         const SolverOptions& options, SolverReport* report) {
    params.validate();
    lattice.validate();
    if (std::abs(std::abs(target) - 1.0) > 1e-6)
        throw ConfigError("find_eigenpair: target must lie on the unit circle");

    // iteration runs on the unitary g = 0 operator
    WalkParams base = params;
    base.g = 0.0;

    StepOperator op;
    if (lattice.dimension == 1) {
        auto stepper = std::make_shared<Stepper1D>(base, lattice, theta_profile_1d(base, lattice));
        op.forward = [stepper](const Vector& in, Vector& out) { stepper->apply(in, out); };
        op.adjoint = [stepper](const Vector& in, Vector& out) { stepper->apply_adjoint(in, out); };
    } else {
        auto stepper = std::make_shared<Stepper2D>(base, lattice, theta_profiles_2d(base, lattice));
        op.forward = [stepper](const Vector& in, Vector& out) { stepper->apply(in, out); };
        op.adjoint = [stepper](const Vector& in, Vector& out) { stepper->apply_adjoint(in, out); };
    }

    const long n = lattice.state_dim();
    // residual degrades by at most e^{|g|} under the A(g) map; solve tighter
    const double gauge_margin = std::exp(std::abs(params.g));
    const double tol = options.tol / (params.g != 0.0 ? 4.0 * gauge_margin : 1.0);

    int inner = options.inner_iterations;
    if (inner <= 0)
        inner = static_cast<int>(std::min<long>(std::max(200.0, 32.0 * std::sqrt(double(n))), 4 * n));

    Complex t_solve = target / std::abs(target);
    Vector rhs = random_unit_vector(n, options.seed);
    Vector solved(n), scratch(n), tmp(n);

    auto apply_b = [&](const Vector& in, Vector& out) {
        // out = in - (conj(t) U in + t U^dag in) / 2
        op.u(in, scratch);
        out = in - 0.5 * std::conj(t_solve) * scratch;
        op.u_dagger(in, scratch);
        out -= 0.5 * t_solve * scratch;
    };

    std::vector<Vector> basis;
    RitzOutcome best;
    best.residual = std::numeric_limits<double>::infinity();
    best.distance = std::numeric_limits<double>::infinity();
    int stalled = 0;
    int outer = 0;

    for (outer = 0; outer < options.max_outer; ++outer) {
        minres_hermitian(apply_b, rhs, solved, inner, 1e-14);
        const double nm = solved.norm();
        Vector candidate = nm > 0 ? Vector(solved / nm) : rhs;
        if (orthonormalize_against(basis, candidate)) basis.push_back(std::move(candidate));

        if (basis.empty()) {
            rhs = random_unit_vector(n, options.seed + outer + 1);
            continue;
        }

        RitzOutcome ritz = rayleigh_ritz(op, basis, target, tmp);
        if (ritz.residual < best.residual * 0.5) {
            stalled = 0;
        } else {
            ++stalled;
        }
        if (ritz.residual < best.residual) best = ritz;

        if (best.residual <= tol && best.distance <= 0.1) break;

        if (stalled >= 3) {
            inner = static_cast<int>(std::min<long>(2L * inner, 4 * n));
            stalled = 0;
        }

        // endgame: once the Ritz value is trustworthy, retarget the solve at it
        if (best.residual < 1e-5 && std::abs(best.value) > 0.5) t_solve = best.value / std::abs(best.value);

        rhs = best.vector;

        // cap the basis: keep the vectors spanning the Ritz directions nearest
        // the target plus the latest solve, re-orthonormalized
        if (static_cast<int>(basis.size()) >= options.subspace) {
            std::vector<Vector> kept;
            kept.push_back(best.vector);
            Vector last = basis.back();
            if (orthonormalize_against(kept, last)) kept.push_back(std::move(last));
            basis = std::move(kept);
        }
    }

    if (report) {
        report->outer_rounds = outer;
        report->operator_applies = op.applies;
        report->best_residual = best.residual;
        report->best_distance = best.distance;
        report->converged = best.residual <= tol && best.distance <= 0.1;
    }
    if (!std::isfinite(best.residual) || best.distance > 0.1)
        throw SolverError("find_eigenpair: no Ritz value within 0.1 of the target (best distance " +
                          std::to_string(best.distance) + ")");
    if (best.residual > tol)
        throw SolverError("find_eigenpair: residual " + std::to_string(best.residual) +
                          " did not reach the requested tolerance");

    EigenPair pair;
    pair.eigenvalue = best.value;
    pair.right_vector = WaveFunction(lattice, best.vector);

    if (params.g != 0.0) {
        GaugeMap{params.g}.apply(pair.right_vector.amplitudes, lattice.internal_dim(),
                                 GaugeDirection::forward);
        pair.right_vector.amplitudes /= pair.right_vector.amplitudes.norm();
        // recompute the residual against U(g) directly
        StepOperator opg;
        if (lattice.dimension == 1) {
            auto stepper =
                std::make_shared<Stepper1D>(params, lattice, theta_profile_1d(params, lattice));
            opg.forward = [stepper](const Vector& in, Vector& out) { stepper->apply(in, out); };
        } else {
            auto stepper =
                std::make_shared<Stepper2D>(params, lattice, theta_profiles_2d(params, lattice));
            opg.forward = [stepper](const Vector& in, Vector& out) { stepper->apply(in, out); };
        }
        opg.u(pair.right_vector.amplitudes, scratch);
        pair.residual = (scratch - pair.eigenvalue * pair.right_vector.amplitudes).norm();
        if (pair.residual > options.tol)
            throw SolverError("find_eigenpair: gauge-mapped residual " +
                              std::to_string(pair.residual) + " exceeds the tolerance");
    } else {
        // re-verify rather than trusting the Ritz bookkeeping
        op.u(pair.right_vector.amplitudes, scratch);
        pair.residual = (scratch - pair.eigenvalue * pair.right_vector.amplitudes).norm();
    }
    return pair;
}

WaveFunction left_vector_for(const EigenPair& pair, double g) {
    WaveFunction left = pair.right_vector;
    GaugeMap{g}.apply(left.amplitudes, left.lattice.internal_dim(), GaugeDirection::inverse);
    GaugeMap{g}.apply(left.amplitudes, left.lattice.internal_dim(), GaugeDirection::inverse);
    const Complex overlap = left.amplitudes.dot(pair.right_vector.amplitudes);
    if (std::abs(overlap) < 1e-12)
        throw SolverError("left_vector_for: vanishing left-right overlap");
    left.amplitudes /= std::conj(overlap);
    return left;
}

}  // namespace qaw
