#pragma once

#include <Eigen/Core>

#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

// Dense one-step operators assembled from first principles, on a route
// independent of the matrix-free steppers: internal blocks through numerical
// matrix exponentials of the defining Hamiltonians (and Pauli tensor
// products in 2D), shifts through their projector definitions with the
// half-sum forms along y. Used by the verification suite and the tests as
// the equivalence oracle; same dimension guard as the dense module.
Eigen::MatrixXcd reference_dense_1d(const WalkParams& params, const LatticeSpec& lattice);
Eigen::MatrixXcd reference_dense_2d(const WalkParams& params, const LatticeSpec& lattice);

}  // namespace qaw
