// material.hpp — material constants, bath thermodynamics and quadrature grid
//
// Unit system used throughout: meV for energy, ps for time, nm for length,
// K for temperature. All other quantities are derived from these.
#pragma once

#include <cstddef>

namespace dqd {

namespace units {
// 1 kg/m^3 expressed in meV ps^2 / nm^5.
inline constexpr double kg_per_m3 = 6.241509074;
}

inline constexpr double k_hbar = 0.6582;       // meV ps
inline constexpr double k_boltzmann = 0.08617; // meV / K

// Deformation-potential material and dot-geometry constants.
// Defaults are the GaAs set for small self-assembled dots.
struct MaterialParams {
    double sigma_e = 8000.0;                   // electron deformation potential (meV)
    double sigma_h = -1000.0;                  // hole deformation potential (meV)
    double sound_speed = 5.6;                  // longitudinal sound speed (nm/ps)
    double mass_density = 5600.0 * units::kg_per_m3; // crystal density (meV ps^2/nm^5)
    double l_e = 4.4;                          // electron in-plane width (nm)
    double l_h = 3.6;                          // hole in-plane width (nm)
    double l_z = 1.0;                          // vertical width, both carriers (nm)

    void validate() const;
};

// Thermal state of the phonon bath. Temperature is the only knob; it enters
// exclusively through the Bose occupation factor 2n+1 = coth(hbar w / 2 kB T).
struct BathSpec {
    double temperature = 0.0;       // K
    double boltzmann_k = k_boltzmann;
    double hbar = k_hbar;

    void validate() const;
};

// Returns 2n(w)+1 for angular frequency w (1/ps); exactly 1 at T = 0.
double thermal_factor(double omega, const BathSpec& bath);

enum class AzimuthalMode {
    bessel_reduction, // closed-form phi average, (1 + J0(k_perp d)) / 2
    trapezoid         // periodic trapezoid sampling of cos^2(k_x d / 2)
};

// Momentum-space quadrature for converting bath sums to integrals.
// Each axis is covered by composite 8-point Gauss-Legendre panels; the panel
// touching k = 0 is subdivided geometrically so the thermal 1/k weight is
// resolved. n_perp / n_z count the base nodes per axis (multiples of 8).
struct SpectralGrid {
    double k_perp_max = 6.0;  // 1/nm
    double k_z_max = 6.0;     // 1/nm
    std::size_t n_perp = 1024;
    std::size_t n_z = 1024;
    AzimuthalMode azimuthal_mode = AzimuthalMode::bessel_reduction;
    std::size_t n_phi = 256;  // samples for the trapezoid mode

    void validate() const;
};

} // namespace dqd
