#include "qaw/gauge.hpp"

#include <cmath>

namespace qaw {

void GaugeMap::apply(Vector& amplitudes, int internal_dim, GaugeDirection dir) const {
    if (std::abs(g) > kMaxGaugeParameter)
        throw ConfigError("gauge: |g| exceeds the supported cap of 20");
    const double sign = dir == GaugeDirection::forward ? 1.0 : -1.0;
    const double ground_factor = std::exp(-sign * g / 2.0);
    const double excited_factor = std::exp(sign * g / 2.0);
    const int half = internal_dim / 2;
    const long sites = amplitudes.size() / internal_dim;
    for (long s = 0; s < sites; ++s) {
        Complex* v = amplitudes.data() + s * internal_dim;
        for (int m = 0; m < half; ++m) v[m] *= ground_factor;
        for (int m = half; m < internal_dim; ++m) v[m] *= excited_factor;
    }
}

WaveFunction apply_gauge(const WaveFunction& state, double g, GaugeDirection dir) {
    WaveFunction out = state;
    GaugeMap{g}.apply(out.amplitudes, state.lattice.internal_dim(), dir);
    return out;
}

}  // namespace qaw
