// kernel.hpp — phonon dephasing functions A_ij(t), B_ij(t) of the common-bath
// pure-dephasing model, tabulated on a time grid for fixed (T, d).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dqd/material.hpp"

namespace dqd {

// Finite interdot distance vs. the analytic infinite-distance limit in which
// the in-plane interference factors average to 1/2 (independent baths).
enum class BathGeometry { common, separate };

// Volume-normalized coupling weight V |g_k|^2 (nm^3) for the deformation
// potential coupling; g_k = f_k / (hbar w_k). Defined as 0 at k = 0.
double coupling_density(double k_perp, double k_z, const MaterialParams& params);

// Tabulated dephasing functions for one (temperature, distance) pair.
// Index convention: two-qubit basis |0>=|00>, |1>=|01>, |2>=|10>, |3>=|11>,
// phases A and exponents B act on coherences as rho_ij -> rho_ij e^{-iA+B}.
// Only a01, a03, b01, b03 are independent; the rest follow from
//   a02 = a01, a12 = 0, a13 = a23 = a03 - a01,
//   b02 = b13 = b23 = b01, b12 = 4 b01 - b03.
struct DephasingKernel {
    std::vector<double> time_grid; // ps, ascending
    std::vector<double> a01, a03;  // phases (rad)
    std::vector<double> b01, b03;  // damping exponents, <= 0
    double temperature = 0.0;      // K
    double distance = 0.0;         // nm
    BathGeometry geometry = BathGeometry::common;

    std::size_t size() const { return time_grid.size(); }
    double a13(std::size_t i) const { return a03[i] - a01[i]; }
    double b12(std::size_t i) const { return 4.0 * b01[i] - b03[i]; }
};

// Long-time limits of the damping exponents (the oscillatory cos wt terms
// average to zero); phases vanish in the same limit.
struct AsymptoticDephasing {
    double b01 = 0.0;
    double b03 = 0.0;
    double temperature = 0.0;
    double distance = 0.0;

    double b12() const { return 4.0 * b01 - b03; }
};

// Quadrature evaluation of the bath sums on `times` (ascending, >= 0).
// Throws ResolutionError when the node spacing cannot resolve the phase
// oscillations at max(times).
DephasingKernel compute_kernel(const std::vector<double>& times, const BathSpec& bath,
                               double distance, const MaterialParams& params,
                               const SpectralGrid& grid,
                               BathGeometry geometry = BathGeometry::common);

// Same integrand tables shared across a batch of temperatures. Produces
// bit-identical results to per-temperature compute_kernel calls.
std::vector<DephasingKernel> compute_kernel_batch(const std::vector<double>& times,
                                                  const std::vector<double>& temperatures_K,
                                                  double distance,
                                                  const MaterialParams& params,
                                                  const SpectralGrid& grid,
                                                  BathGeometry geometry = BathGeometry::common);

AsymptoticDephasing asymptotic_b(const BathSpec& bath, double distance,
                                 const MaterialParams& params, const SpectralGrid& grid,
                                 BathGeometry geometry = BathGeometry::common);

std::vector<AsymptoticDephasing> asymptotic_b_batch(const std::vector<double>& temperatures_K,
                                                    double distance,
                                                    const MaterialParams& params,
                                                    const SpectralGrid& grid,
                                                    BathGeometry geometry = BathGeometry::common);

// Relative change of b01(inf) when both node counts are halved; the cheap
// convergence probe recorded in run manifests.
double grid_convergence_indicator(const BathSpec& bath, double distance,
                                  const MaterialParams& params, const SpectralGrid& grid);

// Kernel table as CSV (`t_ps,a01,a03,b01,b03,b12`), 12 significant digits.
std::string kernel_to_csv(const DephasingKernel& kernel);

} // namespace dqd
