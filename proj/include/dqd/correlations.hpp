// correlations.hpp — Bloch decomposition, geometric/rescaled discord bounds,
// X-state closed forms, purity and concurrence
#pragma once

#include <string>

#include <Eigen/Dense>

#include "dqd/state.hpp"

namespace dqd {

// rho = 1/4 (I + sum x_i s_i(X)I + sum y_i I(X)s_i + sum T_ij s_i(X)s_j);
// x belongs to the left qubit, y to the right one.
struct BlochDecomposition {
    Eigen::Vector3d x_vec;
    Eigen::Vector3d y_vec;
    Eigen::Matrix3d t_mat;
};

BlochDecomposition bloch_decompose(const TwoQubitState& rho);

// Closed-form bounds on the geometric discord.
//   lower: 1/4 max(Tr Kx - kx, Tr Ky - ky) with Kx = x x^T + T T^T,
//          Ky = y y^T + T^T T and k the largest eigenvalue.
//   upper: 1/4 min(Tr Kx - kx + Tr Ly - ly, Tr Ky - ky + Tr Lx - lx) with
//          Ly = y y^T + T^T k̂x k̂x^T T, Lx = x x^T + T k̂y k̂y^T T^T built
//          from the top eigenvectors of Kx, Ky. Degenerate top eigenvalues
//          are resolved deterministically (largest |first component| wins,
//          sign of the first nonzero component fixed positive).
double geometric_discord_lower(const TwoQubitState& rho);
double geometric_discord_upper(const TwoQubitState& rho);

// Purity-compensated discord, in [0, 1/2] for two qubits:
//   D = 1/2 (1 - sqrt(3)/2)^{-1} [1 - sqrt(1 - ds / (2 purity))].
// Requires 0 <= ds <= 2 purity.
double rescaled_discord(double ds, double purity);

// Geometric discord of the X-state (a, b, b, c; x, y):
//   min(2|y|^2 + 2|x|^2, 1/2 [(a-b)^2 + (b-c)^2] + (|y|-|x|)^2).
double x_state_geometric_discord(double a, double b, double c, Complex x, Complex y);

// Geometric discord of initial_x_from_alpha(alpha2):
//   min( 1/4 (2a2-1)^2 [(2a2-1)^2 + 1], 4 a2^2 (a2-1)^2 ).
double initial_x_discord(double alpha2);

double purity(const TwoQubitState& rho);

// Wootters concurrence max(0, l1 - l2 - l3 - l4) from the spin-flipped
// product matrix rho (sy(X)sy) rho* (sy(X)sy).
double concurrence(const TwoQubitState& rho);

// Everything the sweeps report for one state.
struct DiscordReport {
    double ds_lower = 0.0;    // geometric discord bounds
    double ds_upper = 0.0;
    double purity = 0.0;      // Tr rho^2
    double d_lower = 0.0;     // rescaled discord bounds
    double d_upper = 0.0;
    double concurrence = 0.0;

    std::string to_json() const;
};

DiscordReport discord_report(const TwoQubitState& rho);

} // namespace dqd
