#pragma once

#include <complex>
#include <Eigen/Core>

#include "qaw/errors.hpp"

namespace qaw {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

// Internal-state bit conventions. The composite index packs sigma (L/R)
// fastest, tau (D/U) in the middle (2D only) and upsilon (G/E) slowest, so
// the ground sector always occupies the first half of the internal indices.
//   1D order: {LG, RG, LE, RE}
//   2D order: {LDG, RDG, LUG, RUG, LDE, RDE, LUE, RUE}
inline constexpr int kLeft = 0;
inline constexpr int kRight = 1;
inline constexpr int kDown = 0;
inline constexpr int kUp = 1;
inline constexpr int kGround = 0;
inline constexpr int kExcited = 1;

inline constexpr int internal_index_1d(int lr, int ge) { return 2 * ge + lr; }
inline constexpr int internal_index_2d(int lr, int du, int ge) { return 4 * ge + 2 * du + lr; }

inline constexpr int lr_bit_1d(int m) { return m & 1; }
inline constexpr int ge_bit_1d(int m) { return (m >> 1) & 1; }
inline constexpr int lr_bit_2d(int m) { return m & 1; }
inline constexpr int du_bit_2d(int m) { return (m >> 1) & 1; }
inline constexpr int ge_bit_2d(int m) { return (m >> 2) & 1; }

// Periodic lattice with odd extents, sites labeled by signed coordinates
// centered on zero; lattice constant is one site.
struct LatticeSpec {
    int dimension = 1;  // 1 or 2
    int extent_x = 3;   // odd, >= 3
    int extent_y = 1;   // odd, >= 3 when dimension == 2

    static LatticeSpec line(int lx) { return LatticeSpec{1, lx, 1}; }
    static LatticeSpec plane(int lx, int ly) { return LatticeSpec{2, lx, ly}; }

    void validate() const;

    int half_x() const { return (extent_x - 1) / 2; }
    int half_y() const { return (extent_y - 1) / 2; }
    long num_sites() const { return static_cast<long>(extent_x) * (dimension == 2 ? extent_y : 1); }
    int internal_dim() const { return dimension == 1 ? 4 : 8; }
    long state_dim() const { return num_sites() * internal_dim(); }

    // coordinate <-> site index (row-major, y slow)
    long site_index(int x, int y = 0) const {
        return static_cast<long>(y + half_y()) * extent_x + (x + half_x());
    }
    int coord_x(long site) const { return static_cast<int>(site % extent_x) - half_x(); }
    int coord_y(long site) const { return static_cast<int>(site / extent_x) - half_y(); }

    bool operator==(const LatticeSpec&) const = default;
};

// Walker state: complex amplitudes indexed by (site, internal state),
// internal index fastest.
struct WaveFunction {
    LatticeSpec lattice;
    Vector amplitudes;

    WaveFunction() = default;
    explicit WaveFunction(const LatticeSpec& lat)
        : lattice(lat), amplitudes(Vector::Zero(lat.state_dim())) {}
    WaveFunction(const LatticeSpec& lat, Vector amps) : lattice(lat), amplitudes(std::move(amps)) {
        if (amplitudes.size() != lat.state_dim())
            throw ConfigError("WaveFunction: amplitude size does not match lattice");
    }

    Complex& at(int x, int m) { return amplitudes[lattice.site_index(x) * lattice.internal_dim() + m]; }
    Complex& at(int x, int y, int m) {
        return amplitudes[lattice.site_index(x, y) * lattice.internal_dim() + m];
    }
    Complex at(int x, int m) const {
        return amplitudes[lattice.site_index(x) * lattice.internal_dim() + m];
    }
    Complex at(int x, int y, int m) const {
        return amplitudes[lattice.site_index(x, y) * lattice.internal_dim() + m];
    }
};

// Sum of |amplitude|^2 over all sites and internal states.
double total_norm_sq(const WaveFunction& state);

// Move amplitudes by delta sites per axis with periodic wrap. Offsets with
// |delta| >= extent are rejected (the wrap intent would be ambiguous).
WaveFunction translate(const WaveFunction& state, int delta_x, int delta_y = 0);

// Multiply the amplitude at (x, y) by exp(i (kx x + ky y)). 2D states only.
WaveFunction apply_plane_wave(const WaveFunction& state, double kx, double ky);

}  // namespace qaw
