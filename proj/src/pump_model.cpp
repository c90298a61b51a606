#include "qaw/pump_model.hpp"

#include <cmath>

#include "qaw/params.hpp"

namespace qaw {

void RateModel::validate() const {
    if (std::abs(g) > kMaxGaugeParameter)
        throw ConfigError("rate model: |g| exceeds the supported cap of 20");
    if (n1_initial < 0.0 || n2_initial < 0.0)
        throw ConfigError("rate model: occupation numbers must be non-negative");
    if (!(n_total() > 0.0)) throw ConfigError("rate model: total atom count must be positive");
}

GoldenRuleRates golden_rule_rates(double w, double g) {
    if (std::abs(g) > kMaxGaugeParameter)
        throw ConfigError("golden_rule_rates: |g| exceeds the supported cap of 20");
    return {w * w * std::exp(2.0 * g), w * w * std::exp(-2.0 * g)};
}

namespace {

struct Derivative {
    double dn1, dn2;
};

Derivative rhs(const GoldenRuleRates& r, double n1, double n2) {
    const double flow = r.w12 * n2 - r.w21 * n1;
    return {flow, -flow};
}

}  // namespace

std::vector<RatePoint> integrate_rate_equations(const RateModel& model, double t_max, double dt) {
    model.validate();
    if (!(dt > 0.0)) throw ConfigError("integrate_rate_equations: dt must be positive");
    if (t_max < 0.0) throw ConfigError("integrate_rate_equations: t_max must be non-negative");
    const GoldenRuleRates r = golden_rule_rates(model.w, model.g);
    if (dt >= 2.0 / (r.w12 + r.w21))
        throw ConfigError("integrate_rate_equations: dt >= 2/(w12+w21) is unstable");

    const long steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));
    std::vector<RatePoint> out;
    out.reserve(steps + 1);
    double n1 = model.n1_initial, n2 = model.n2_initial;
    out.push_back({0.0, n1, n2});
    for (long k = 0; k < steps; ++k) {
        const double h = std::min(dt, t_max - k * dt);
        const Derivative k1 = rhs(r, n1, n2);
        const Derivative k2 = rhs(r, n1 + 0.5 * h * k1.dn1, n2 + 0.5 * h * k1.dn2);
        const Derivative k3 = rhs(r, n1 + 0.5 * h * k2.dn1, n2 + 0.5 * h * k2.dn2);
        const Derivative k4 = rhs(r, n1 + h * k3.dn1, n2 + h * k3.dn2);
        n1 += h / 6.0 * (k1.dn1 + 2.0 * k2.dn1 + 2.0 * k3.dn1 + k4.dn1);
        n2 += h / 6.0 * (k1.dn2 + 2.0 * k2.dn2 + 2.0 * k3.dn2 + k4.dn2);
        out.push_back({std::min((k + 1) * dt, t_max), n1, n2});
    }
    return out;
}

RatePoint closed_form_occupations(const RateModel& model, double t) {
    model.validate();
    const GoldenRuleRates r = golden_rule_rates(model.w, model.g);
    const double rate = r.w12 + r.w21;
    const double n1_st = model.n_total() * r.w12 / rate;
    const double n1 = n1_st + (model.n1_initial - n1_st) * std::exp(-rate * t);
    return {t, n1, model.n_total() - n1};
}

double stationary_ratio(double g) { return std::exp(4.0 * g); }

}  // namespace qaw
