#pragma once

#include "qaw/lattice.hpp"
#include "qaw/params.hpp"

namespace qaw {

enum class GaugeDirection { forward, inverse };

// Imaginary gauge transformation A(g): multiplies ground-sector amplitudes by
// exp(-g/2) and excited-sector amplitudes by exp(+g/2), site-independent.
// The inverse direction applies A(-g). A(g) A(-g) = identity.
struct GaugeMap {
    double g = 0.0;

    // In-place action on a flat amplitude vector with the given internal dim.
    void apply(Vector& amplitudes, int internal_dim, GaugeDirection dir) const;
};

WaveFunction apply_gauge(const WaveFunction& state, double g,
                         GaugeDirection dir = GaugeDirection::forward);

}  // namespace qaw
