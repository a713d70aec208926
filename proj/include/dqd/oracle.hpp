// oracle.hpp — brute-force measurement oracle for the geometric discord
#pragma once

#include <cstddef>
#include <string>

#include "dqd/state.hpp"

namespace dqd {

enum class MeasuredSide { left, right };

// Bloch-sphere direction grid for projective measurements; midpoint samples
// in theta avoid duplicated poles while covering [0, pi] x [0, 2pi).
struct MeasurementGrid {
    std::size_t n_theta = 128;
    std::size_t n_phi = 128;
    MeasuredSide side = MeasuredSide::left;

    void validate() const;
};

// min over grid directions of || rho - sum_a (P_a (X) I) rho (P_a (X) I) ||_HS^2
// (projectors on the right factor when side = right). Decreases monotonically
// under grid refinement; built from literal 4x4 projector algebra so it stays
// independent of the Bloch-vector closed forms it cross-checks.
double oracle_one_sided(const TwoQubitState& rho, const MeasurementGrid& grid);

struct SandwichReport {
    double lower = 0.0;        // geometric_discord_lower
    double oracle_left = 0.0;
    double oracle_right = 0.0;
    double closed_left = 0.0;  // 1/4 (Tr Kx - kx)
    double closed_right = 0.0; // 1/4 (Tr Ky - ky)
    double grid_tolerance = 0.0;
    bool passed = false;
    std::string violating_state; // JSON of rho when a check failed, else empty
};

// Checks lower <= max(oracle_left, oracle_right) + tol and that each oracle
// value dominates its side's closed form minus tol.
SandwichReport sandwich_check(const TwoQubitState& rho, const MeasurementGrid& grid,
                              double grid_tolerance);
SandwichReport sandwich_check(const TwoQubitState& rho, const MeasurementGrid& grid);

} // namespace dqd
