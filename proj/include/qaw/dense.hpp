#pragma once

#include <Eigen/Core>

#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

// Largest state dimension for which dense assembly is permitted.
inline constexpr long kDenseDimensionGuard = 10000;

// Explicit matrix of one evolution step, assembled column by column from the
// matrix-free application. Rejected above the dimension guard.
Eigen::MatrixXcd dense_evolution_matrix(const WalkParams& params, const LatticeSpec& lattice);

struct SpectrumResult {
    Eigen::VectorXcd eigenvalues;
    Eigen::MatrixXcd eigenvectors;  // columns
    bool converged = false;         // QR iteration converged and residuals check out
    double max_residual = 0.0;      // max_n ||A v_n - lambda_n v_n||
};

// Full spectrum of a dense one-step operator with residuals re-verified
// against the input matrix.
SpectrumResult dense_spectrum(const Eigen::MatrixXcd& matrix);

}  // namespace qaw
