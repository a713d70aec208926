#include "dqd/propagate.hpp"

#include <array>
#include <cmath>

#include "dqd/errors.hpp"
#include "dqd/material.hpp"

namespace dqd {
namespace {

struct PairFactors {
    double a = 0.0; // phase
    double b = 0.0; // damping exponent
};

// Upper-triangle factors from the kernel identities.
std::array<PairFactors, 6> pair_factors(const DephasingPoint& p) {
    // order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    return {{{p.a01, p.b01},
             {p.a01, p.b01},
             {p.a03, p.b03},
             {0.0, p.b12()},
             {p.a13(), p.b01},
             {p.a13(), p.b01}}};
}

constexpr int k_pair_i[6] = {0, 0, 0, 1, 1, 2};
constexpr int k_pair_j[6] = {1, 2, 3, 2, 3, 3};

} // namespace

TwoQubitState propagate_point(const TwoQubitState& rho0, const DephasingPoint& point,
                              const PropagationSettings& settings, double time) {
    const double e_l = settings.include_energy_phase ? settings.level_shift_L : 0.0;
    const double e_r = settings.include_energy_phase ? settings.level_shift_R : 0.0;
    const std::array<double, 4> energy = {0.0, e_r, e_l, e_l + e_r};

    Matrix4cd rho = rho0.rho();
    const auto factors = pair_factors(point);
    for (int p = 0; p < 6; ++p) {
        const int i = k_pair_i[p];
        const int j = k_pair_j[p];
        Complex f = std::exp(Complex(factors[p].b, -factors[p].a));
        if (settings.include_energy_phase)
            f *= std::exp(Complex(0.0, (energy[j] - energy[i]) * time / k_hbar));
        rho(i, j) = rho0(i, j) * f;
        rho(j, i) = std::conj(rho(i, j));
    }
    return TwoQubitState(rho);
}

TwoQubitState propagate(const TwoQubitState& rho0, const DephasingKernel& kernel,
                        std::size_t t_index, const PropagationSettings& settings) {
    if (t_index >= kernel.size())
        throw ConfigError("propagate: t_index outside the kernel time grid");
    const DephasingPoint point{kernel.a01[t_index], kernel.a03[t_index], kernel.b01[t_index],
                               kernel.b03[t_index]};
    return propagate_point(rho0, point, settings, kernel.time_grid[t_index]);
}

TwoQubitState propagate_asymptotic(const TwoQubitState& rho0, const AsymptoticDephasing& asym) {
    return propagate_point(rho0, DephasingPoint{0.0, 0.0, asym.b01, asym.b03});
}

std::map<std::pair<int, int>, double> normalized_coherences(const TwoQubitState& rho0,
                                                            const DephasingKernel& kernel,
                                                            std::size_t t_index) {
    if (t_index >= kernel.size())
        throw ConfigError("normalized_coherences: t_index outside the kernel time grid");
    const DephasingPoint point{kernel.a01[t_index], kernel.a03[t_index], kernel.b01[t_index],
                               kernel.b03[t_index]};
    const auto factors = pair_factors(point);
    std::map<std::pair<int, int>, double> out;
    for (int p = 0; p < 6; ++p) {
        const int i = k_pair_i[p];
        const int j = k_pair_j[p];
        if (std::abs(rho0(i, j)) == 0.0) continue;
        out[{i, j}] = std::exp(factors[p].b);
    }
    return out;
}

} // namespace dqd
