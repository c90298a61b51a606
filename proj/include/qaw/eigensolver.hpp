#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>

#include "qaw/gauge.hpp"
#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

struct EigenPair {
    Complex eigenvalue;
    WaveFunction right_vector;  // unit Euclidean norm
    double residual = 0.0;      // ||U v - lambda v||, recomputed on acceptance
    std::optional<WaveFunction> left_vector;
};

struct SolverOptions {
    double tol = 1e-10;
    int max_outer = 60;        // inverse-iteration rounds
    int inner_iterations = 0;  // MINRES budget per round; 0 = scaled from dimension
    int subspace = 12;         // Rayleigh-Ritz basis cap
    std::uint64_t seed = 20240901;
};

struct SolverReport {
    int outer_rounds = 0;
    long operator_applies = 0;
    double best_residual = 0.0;
    double best_distance = 0.0;
    bool converged = false;
};

// MINRES for Hermitian operators (possibly indefinite or singular). Solves
// apply(x) ~= rhs; returns the iteration count. Exposed for its own tests.
long minres_hermitian(const std::function<void(const Vector&, Vector&)>& apply, const Vector& rhs,
                      Vector& x, int max_iterations, double rtol);

// Matrix-free targeted eigensolver for the one-step operator.
//
// The unit-circle target t is turned into the Hermitian operator
// B = I - (conj(t) U + t U^dagger)/2, whose smallest eigenvalues belong to the
// eigenvectors of U with eigenvalue angle nearest arg(t); inexact inverse
// iteration (MINRES on B) builds a subspace and Rayleigh-Ritz with U itself
// resolves the eigenpair. For g != 0 the iteration runs on U(0) and the
// resulting vector is mapped through A(g) (the eigenvalue is unchanged);
// the residual is recomputed against U(g) before acceptance.
//
// Throws SolverError when no Ritz value lands within 0.1 of the target or the
// residual bound is not met within the iteration budget.
EigenPair find_eigenpair(const WalkParams& params, const LatticeSpec& lattice, Complex target,
                         const SolverOptions& options = {}, SolverReport* report = nullptr);

// Left vector of a pair found at parameter g: A(g)^{-2} applied to the right
// vector, rescaled so <left|right> = 1. Valid because the right vector is
// A(g) times an eigenvector of the unitary g = 0 operator.
WaveFunction left_vector_for(const EigenPair& pair, double g);

}  // namespace qaw
