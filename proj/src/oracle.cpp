#include "dqd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dqd/correlations.hpp"
#include "dqd/errors.hpp"

namespace dqd {
namespace {

Eigen::Matrix2cd projector(double theta, double phi, int sign) {
    // (I + s n.sigma) / 2 along n = (sin t cos p, sin t sin p, cos t)
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    Eigen::Matrix2cd p;
    const double s = static_cast<double>(sign);
    p << 0.5 * (1.0 + s * nz), 0.5 * s * Complex(nx, -ny),
         0.5 * s * Complex(nx, ny), 0.5 * (1.0 - s * nz);
    return p;
}

Matrix4cd embed(const Eigen::Matrix2cd& p, MeasuredSide side) {
    Matrix4cd out = Matrix4cd::Zero();
    if (side == MeasuredSide::left) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.block<2, 2>(2 * i, 2 * j) = p(i, j) * Eigen::Matrix2cd::Identity();
    } else {
        out.block<2, 2>(0, 0) = p;
        out.block<2, 2>(2, 2) = p;
    }
    return out;
}

// One-sided closed form 1/4 (Tr K - k) for the requested side.
double closed_form_side(const TwoQubitState& rho, MeasuredSide side) {
    const BlochDecomposition b = bloch_decompose(rho);
    const Eigen::Vector3d local = (side == MeasuredSide::left) ? b.x_vec : b.y_vec;
    const Eigen::Matrix3d gram = (side == MeasuredSide::left)
                                     ? Eigen::Matrix3d(b.t_mat * b.t_mat.transpose())
                                     : Eigen::Matrix3d(b.t_mat.transpose() * b.t_mat);
    const Eigen::Matrix3d k = local * local.transpose() + gram;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(k, Eigen::EigenvaluesOnly);
    return 0.25 * (k.trace() - es.eigenvalues().maxCoeff());
}

} // namespace

void MeasurementGrid::validate() const {
    if (n_theta < 32 || n_phi < 32)
        throw ConfigError("MeasurementGrid: resolution must be at least 32x32");
}

double oracle_one_sided(const TwoQubitState& rho, const MeasurementGrid& grid) {
    grid.validate();
    const Matrix4cd& r = rho.rho();
    double best = std::numeric_limits<double>::infinity();
    // midpoint rule in theta keeps the poles unique; phi in [0, 2pi)
    for (std::size_t it = 0; it < grid.n_theta; ++it) {
        const double theta = std::numbers::pi * (static_cast<double>(it) + 0.5) /
                             static_cast<double>(grid.n_theta);
        for (std::size_t ip = 0; ip < grid.n_phi; ++ip) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(ip) /
                               static_cast<double>(grid.n_phi);
            const Matrix4cd plus = embed(projector(theta, phi, +1), grid.side);
            const Matrix4cd minus = embed(projector(theta, phi, -1), grid.side);
            const Matrix4cd dephased = plus * r * plus + minus * r * minus;
            const double dist = (r - dephased).squaredNorm();
            best = std::min(best, dist);
        }
    }
    return best;
}

SandwichReport sandwich_check(const TwoQubitState& rho, const MeasurementGrid& grid,
                              double grid_tolerance) {
    MeasurementGrid left = grid;
    left.side = MeasuredSide::left;
    MeasurementGrid right = grid;
    right.side = MeasuredSide::right;

    SandwichReport rep;
    rep.grid_tolerance = grid_tolerance;
    rep.lower = geometric_discord_lower(rho);
    rep.oracle_left = oracle_one_sided(rho, left);
    rep.oracle_right = oracle_one_sided(rho, right);
    rep.closed_left = closed_form_side(rho, MeasuredSide::left);
    rep.closed_right = closed_form_side(rho, MeasuredSide::right);

    rep.passed = rep.lower <= std::max(rep.oracle_left, rep.oracle_right) + grid_tolerance &&
                 rep.oracle_left >= rep.closed_left - grid_tolerance &&
                 rep.oracle_right >= rep.closed_right - grid_tolerance;
    if (!rep.passed) rep.violating_state = rho.to_json();
    return rep;
}

SandwichReport sandwich_check(const TwoQubitState& rho, const MeasurementGrid& grid) {
    // worst-case grid offset is half a cell diagonal; the objective is smooth
    // trigonometry bounded by 1/2, so a squared-spacing tolerance is ample
    const double spacing = std::numbers::pi / static_cast<double>(std::min(grid.n_theta, grid.n_phi));
    return sandwich_check(rho, grid, 4.0 * spacing * spacing);
}

} // namespace dqd
