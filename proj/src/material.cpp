#include "dqd/material.hpp"

#include <cmath>
#include <string>

#include "dqd/errors.hpp"

namespace dqd {

void MaterialParams::validate() const {
    if (!(l_e > 0.0) || !(l_h > 0.0) || !(l_z > 0.0))
        throw ConfigError("MaterialParams: wavefunction widths must be strictly positive");
    if (!(sound_speed > 0.0))
        throw ConfigError("MaterialParams: sound_speed must be positive");
    if (!(mass_density > 0.0))
        throw ConfigError("MaterialParams: mass_density must be positive");
}

void BathSpec::validate() const {
    if (!(temperature >= 0.0))
        throw ConfigError("BathSpec: temperature must be >= 0");
    if (!(boltzmann_k > 0.0) || !(hbar > 0.0))
        throw ConfigError("BathSpec: physical constants must be positive");
}

double thermal_factor(double omega, const BathSpec& bath) {
    if (!(omega > 0.0))
        throw std::domain_error("thermal_factor: omega must be positive");
    if (bath.temperature == 0.0) return 1.0;
    return 1.0 / std::tanh(bath.hbar * omega / (2.0 * bath.boltzmann_k * bath.temperature));
}

void SpectralGrid::validate() const {
    if (!(k_perp_max > 0.0) || !(k_z_max > 0.0))
        throw ConfigError("SpectralGrid: momentum cutoffs must be positive");
    if (n_perp < 16 || n_z < 16)
        throw ConfigError("SpectralGrid: point counts must be at least 16");
    if (n_perp % 8 != 0 || n_z % 8 != 0)
        throw ConfigError("SpectralGrid: point counts must be multiples of 8 "
                          "(8-point Gauss-Legendre panels)");
    if (azimuthal_mode == AzimuthalMode::trapezoid && n_phi < 8)
        throw ConfigError("SpectralGrid: n_phi must be at least 8");
}

} // namespace dqd
