#pragma once

#include <vector>

#include "qaw/errors.hpp"

namespace qaw {

// Two-level occupation model under pumping and spontaneous emission:
//   dN1/dt = w12 N2 - w21 N1,   dN2/dt = w21 N1 - w12 N2.
struct RateModel {
    double w = 0.0;        // coupling, as in the walk Hamiltonian
    double g = 0.0;        // non-Hermiticity parameter
    double n1_initial = 1.0;
    double n2_initial = 0.0;

    double n_total() const { return n1_initial + n2_initial; }
    void validate() const;
};

struct GoldenRuleRates {
    double w21 = 0.0;  // ground -> excited (pumping)
    double w12 = 0.0;  // excited -> ground (spontaneous emission)
};

// w21 = w^2 e^{2g}, w12 = w^2 e^{-2g}.
GoldenRuleRates golden_rule_rates(double w, double g);

struct RatePoint {
    double t = 0.0;
    double n1 = 0.0;
    double n2 = 0.0;
};

// Fixed-step RK4 trajectory from t = 0 to t_max. dt must satisfy
// dt < 2 / (w12 + w21) (explicit-integrator stability for this linear system).
std::vector<RatePoint> integrate_rate_equations(const RateModel& model, double t_max, double dt);

// Exact solution of the linear system: exponential relaxation to the
// stationary split with rate w12 + w21.
RatePoint closed_form_occupations(const RateModel& model, double t);

// Stationary ratio N2/N1 = w21/w12 = e^{4g}.
double stationary_ratio(double g);

}  // namespace qaw
