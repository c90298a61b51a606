#include "qaw/lattice.hpp"

#include <cmath>
#include <cstdlib>

namespace qaw {

void LatticeSpec::validate() const {
    if (dimension != 1 && dimension != 2) throw ConfigError("lattice: dimension must be 1 or 2");
    if (extent_x < 3 || extent_x % 2 == 0)
        throw ConfigError("lattice: extent_x must be odd and >= 3");
    if (dimension == 2 && (extent_y < 3 || extent_y % 2 == 0))
        throw ConfigError("lattice: extent_y must be odd and >= 3");
}

double total_norm_sq(const WaveFunction& state) { return state.amplitudes.squaredNorm(); }

WaveFunction translate(const WaveFunction& state, int delta_x, int delta_y) {
    const LatticeSpec& lat = state.lattice;
    if (std::abs(delta_x) >= lat.extent_x)
        throw ConfigError("translate: |delta_x| must be smaller than extent_x");
    if (lat.dimension == 2 && std::abs(delta_y) >= lat.extent_y)
        throw ConfigError("translate: |delta_y| must be smaller than extent_y");
    if (lat.dimension == 1 && delta_y != 0)
        throw ConfigError("translate: delta_y given for a 1D state");

    const int lx = lat.extent_x;
    const int ly = lat.dimension == 2 ? lat.extent_y : 1;
    const int idim = lat.internal_dim();
    WaveFunction out(lat);
    for (int iy = 0; iy < ly; ++iy) {
        const int jy = (iy + delta_y % ly + ly) % ly;
        for (int ix = 0; ix < lx; ++ix) {
            const int jx = (ix + delta_x % lx + lx) % lx;
            const long src = (static_cast<long>(iy) * lx + ix) * idim;
            const long dst = (static_cast<long>(jy) * lx + jx) * idim;
            for (int m = 0; m < idim; ++m) out.amplitudes[dst + m] = state.amplitudes[src + m];
        }
    }
    return out;
}

WaveFunction apply_plane_wave(const WaveFunction& state, double kx, double ky) {
    const LatticeSpec& lat = state.lattice;
    if (lat.dimension != 2) throw ConfigError("apply_plane_wave: 2D states only");
    const int idim = lat.internal_dim();
    WaveFunction out = state;
    for (long s = 0; s < lat.num_sites(); ++s) {
        const double phase = kx * lat.coord_x(s) + ky * lat.coord_y(s);
        const Complex factor = std::polar(1.0, phase);
        for (int m = 0; m < idim; ++m) out.amplitudes[s * idim + m] *= factor;
    }
    return out;
}

}  // namespace qaw
