#include "qaw/dense.hpp"

#include <Eigen/Eigenvalues>

#include "qaw/walk1d.hpp"
#include "qaw/walk2d.hpp"

namespace qaw {

Eigen::MatrixXcd dense_evolution_matrix(const WalkParams& params, const LatticeSpec& lattice) {
    lattice.validate();
    const long n = lattice.state_dim();
    if (n > kDenseDimensionGuard)
        throw ConfigError("dense_evolution_matrix: state dimension exceeds the dense guard");

    Eigen::MatrixXcd u(n, n);
    Vector e = Vector::Zero(n), col(n);
    if (lattice.dimension == 1) {
        Stepper1D stepper(params, lattice, theta_profile_1d(params, lattice));
        for (long j = 0; j < n; ++j) {
            e[j] = 1.0;
            stepper.apply(e, col);
            u.col(j) = col;
            e[j] = 0.0;
        }
    } else {
        Stepper2D stepper(params, lattice, theta_profiles_2d(params, lattice));
        for (long j = 0; j < n; ++j) {
            e[j] = 1.0;
            stepper.apply(e, col);
            u.col(j) = col;
            e[j] = 0.0;
        }
    }
    return u;
}

SpectrumResult dense_spectrum(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols()) throw ConfigError("dense_spectrum: matrix must be square");
    if (matrix.rows() > kDenseDimensionGuard)
        throw ConfigError("dense_spectrum: dimension exceeds the dense guard");

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix, /*computeEigenvectors=*/true);
    SpectrumResult result;
    result.eigenvalues = solver.eigenvalues();
    result.eigenvectors = solver.eigenvectors();
    if (solver.info() != Eigen::Success) {
        result.converged = false;
        return result;
    }
    // residuals are re-verified, not trusted from the solver internals
    double max_res = 0.0;
    for (Eigen::Index j = 0; j < result.eigenvalues.size(); ++j) {
        const auto v = result.eigenvectors.col(j);
        const double res = (matrix * v - result.eigenvalues[j] * v).norm() / v.norm();
        if (res > max_res) max_res = res;
    }
    result.max_residual = max_res;
    result.converged = max_res <= 1e-8 * std::max(1.0, matrix.norm());
    return result;
}

}  // namespace qaw
