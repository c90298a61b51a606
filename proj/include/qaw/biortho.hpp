#pragma once

#include <array>
#include <vector>
#include <Eigen/Core>

#include "qaw/lattice.hpp"

namespace qaw {

// Single (G,E) block of the non-Hermitian Hamiltonian, the smallest system
// that carries every appendix-level claim without the L/R degeneracy of the
// full internal space.
struct TwoLevelHamiltonian {
    double epsilon = 0.0;
    double w = 0.0;
    double g = 0.0;

    Eigen::Matrix2cd matrix() const;
    // eigenvalues are -lambda, +lambda with lambda = sqrt(eps^2 + w^2), any g
    double lambda() const;
};

// Right vectors A(g) |psi_n>, left vectors A(g)^{-1} |psi_n> built from the
// orthonormal eigenvectors |psi_n> of the Hermitian g = 0 block; the pairs
// are bi-orthonormal by construction.
struct TwoLevelEigensystem {
    std::array<double, 2> energies;  // ascending: {-lambda, +lambda}
    Eigen::Matrix2cd right;          // columns are right vectors
    Eigen::Matrix2cd left;           // columns are left vectors (as kets)
};

TwoLevelEigensystem right_left_eigensystem(const TwoLevelHamiltonian& h);

// Time series at integer steps T = 0..t_max of the three appendix
// expectation values for |psi^R(T)> = sum_n c_n e^{-i E_n T} |psi^R_n> and
// <psi^L(T)| = sum_n c_n^* e^{+i E_n T} <psi^L_n|.
struct ExpectationSeries {
    std::vector<Complex> left_right_energy;   // <psi^L| H |psi^R>  (conserved)
    std::vector<Complex> right_right_energy;  // <psi^R| H |psi^R>  (fluctuates)
    std::vector<Complex> right_right_norm;    // <psi^R | psi^R>    (fluctuates)
    std::vector<Complex> left_right_norm;     // <psi^L | psi^R>    (conserved)
};

ExpectationSeries expectation_time_series(const TwoLevelHamiltonian& h,
                                          const Eigen::Vector2cd& coefficients, int t_max);

}  // namespace qaw
