// propagate.hpp — exact pure-dephasing map for two excitonic qubits
#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "dqd/kernel.hpp"
#include "dqd/state.hpp"

namespace dqd {

// Optional deterministic single-dot energy phases. The default rotating
// frame drops them: e^{i(E_j-E_i)t/hbar} is a product of single-qubit
// unitaries and leaves every correlation measure in this library invariant.
struct PropagationSettings {
    double level_shift_L = 0.0;        // E_L (meV)
    double level_shift_R = 0.0;        // E_R (meV)
    bool include_energy_phase = false; // when false the shifts are forced to 0
};

// One row of a kernel: the four independent dephasing values at a single time.
struct DephasingPoint {
    double a01 = 0.0;
    double a03 = 0.0;
    double b01 = 0.0;
    double b03 = 0.0;

    double a13() const { return a03 - a01; }
    double b12() const { return 4.0 * b01 - b03; }
};

// rho_ij(t) = rho_ij(0) e^{i(E_j-E_i)t/hbar} e^{-iA_ij(t) + B_ij(t)}; the
// diagonal is untouched. `time` only feeds the optional energy phase.
TwoQubitState propagate_point(const TwoQubitState& rho0, const DephasingPoint& point,
                              const PropagationSettings& settings = {}, double time = 0.0);

// Propagation to kernel.time_grid[t_index].
TwoQubitState propagate(const TwoQubitState& rho0, const DephasingKernel& kernel,
                        std::size_t t_index, const PropagationSettings& settings = {});

// Long-time state: phases averaged out, damping at its asymptotic value.
TwoQubitState propagate_asymptotic(const TwoQubitState& rho0, const AsymptoticDephasing& asym);

// |rho_ij(t)| / |rho_ij(0)| for every upper-triangle pair with nonzero
// initial coherence; pairs with |rho_ij(0)| = 0 are omitted.
std::map<std::pair<int, int>, double> normalized_coherences(const TwoQubitState& rho0,
                                                            const DephasingKernel& kernel,
                                                            std::size_t t_index);

} // namespace dqd
