#include "dqd/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <nlohmann/json.hpp>

#include "dqd/errors.hpp"

namespace dqd {
namespace {

using Eigen::Matrix3d;
using Eigen::Vector3d;

Eigen::Matrix2cd pauli(int i) {
    Eigen::Matrix2cd s;
    switch (i) {
        case 0: s << 0, 1, 1, 0; break;
        case 1: s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0); break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

// --------------------- 3x3 symmetric eigensolver ---------------------
//
// Cyclic Jacobi sweeps; the matrices here (K, L) are tiny and often nearly
// diagonal, so this converges in a handful of sweeps to ~1e-15.

struct Sym3Eigen {
    Vector3d values;
    Matrix3d vectors; // columns
};

Sym3Eigen jacobi_eigen(Matrix3d a) {
    Matrix3d v = Matrix3d::Identity();
    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
    constexpr double rel_tol = 1e-14;
    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
        if (off <= rel_tol * scale) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                Matrix3d rot = Matrix3d::Identity();
                rot(p, p) = c;
                rot(q, q) = c;
                rot(p, q) = s;
                rot(q, p) = -s;
                a = rot.transpose() * a * rot;
                a(p, q) = a(q, p) = 0.0;
                v = v * rot;
            }
        }
    }
    return {a.diagonal(), v};
}

// Eigenvector of the largest eigenvalue; ties (within 1e-12 relative) are
// broken toward the lexicographically largest |component| tuple and the sign
// of the first nonzero component is fixed positive.
Vector3d top_eigenvector(const Matrix3d& m, double* top_value = nullptr) {
    const Sym3Eigen eig = jacobi_eigen(m);
    const double lmax = eig.values.maxCoeff();
    const double tie = 1e-12 * std::max(1.0, std::abs(lmax));
    int best = -1;
    for (int i = 0; i < 3; ++i) {
        if (eig.values[i] < lmax - tie) continue;
        if (best < 0) {
            best = i;
            continue;
        }
        const Vector3d& u = eig.vectors.col(i);
        const Vector3d& w = eig.vectors.col(best);
        for (int c = 0; c < 3; ++c) {
            if (std::abs(std::abs(u[c]) - std::abs(w[c])) <= 1e-12) continue;
            if (std::abs(u[c]) > std::abs(w[c])) best = i;
            break;
        }
    }
    Vector3d out = eig.vectors.col(best);
    for (int c = 0; c < 3; ++c) {
        if (std::abs(out[c]) > 1e-14) {
            if (out[c] < 0.0) out = -out;
            break;
        }
    }
    if (top_value) *top_value = lmax;
    return out;
}

double max_eigenvalue(const Matrix3d& m) { return jacobi_eigen(m).values.maxCoeff(); }

struct SideData {
    Matrix3d k_mat;
    double k_top = 0.0;
    Vector3d k_vec;
    double deficit = 0.0; // Tr K - k
};

SideData side_data(const Vector3d& local, const Matrix3d& gram) {
    SideData s;
    s.k_mat = local * local.transpose() + gram;
    s.k_vec = top_eigenvector(s.k_mat, &s.k_top);
    s.deficit = s.k_mat.trace() - s.k_top;
    return s;
}

} // namespace

BlochDecomposition bloch_decompose(const TwoQubitState& rho) {
    const Matrix4cd& r = rho.rho();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    BlochDecomposition b;
    for (int i = 0; i < 3; ++i) {
        b.x_vec[i] = (r * kron2(pauli(i), id)).trace().real();
        b.y_vec[i] = (r * kron2(id, pauli(i))).trace().real();
        for (int j = 0; j < 3; ++j)
            b.t_mat(i, j) = (r * kron2(pauli(i), pauli(j))).trace().real();
    }
    return b;
}

double geometric_discord_lower(const TwoQubitState& rho) {
    const BlochDecomposition b = bloch_decompose(rho);
    const SideData sx = side_data(b.x_vec, b.t_mat * b.t_mat.transpose());
    const SideData sy = side_data(b.y_vec, b.t_mat.transpose() * b.t_mat);
    return 0.25 * std::max(sx.deficit, sy.deficit);
}

double geometric_discord_upper(const TwoQubitState& rho) {
    const BlochDecomposition b = bloch_decompose(rho);
    const SideData sx = side_data(b.x_vec, b.t_mat * b.t_mat.transpose());
    const SideData sy = side_data(b.y_vec, b.t_mat.transpose() * b.t_mat);

    const Vector3d tx = b.t_mat.transpose() * sx.k_vec;
    const Matrix3d ly = b.y_vec * b.y_vec.transpose() + tx * tx.transpose();
    const Vector3d ty = b.t_mat * sy.k_vec;
    const Matrix3d lx = b.x_vec * b.x_vec.transpose() + ty * ty.transpose();

    const double via_x = sx.deficit + ly.trace() - max_eigenvalue(ly);
    const double via_y = sy.deficit + lx.trace() - max_eigenvalue(lx);
    return 0.25 * std::min(via_x, via_y);
}

double rescaled_discord(double ds, double purity) {
    if (!(ds >= 0.0))
        throw std::domain_error("rescaled_discord: ds must be >= 0");
    if (ds > 2.0 * purity)
        throw std::domain_error("rescaled_discord: ds exceeds 2 purity (radicand negative)");
    static const double scale = 0.5 / (1.0 - std::sqrt(3.0) / 2.0);
    return scale * (1.0 - std::sqrt(1.0 - ds / (2.0 * purity)));
}

double x_state_geometric_discord(double a, double b, double c, Complex x, Complex y) {
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    const double coherence_branch = 2.0 * ay * ay + 2.0 * ax * ax;
    const double diagonal_branch =
        0.5 * ((a - b) * (a - b) + (b - c) * (b - c)) + (ay - ax) * (ay - ax);
    return std::min(coherence_branch, diagonal_branch);
}

double initial_x_discord(double alpha2) {
    if (!(alpha2 >= 0.0 && alpha2 <= 1.0))
        throw std::domain_error("initial_x_discord: alpha2 must lie in [0, 1]");
    const double u = (2.0 * alpha2 - 1.0) * (2.0 * alpha2 - 1.0);
    const double diagonal_branch = 0.25 * u * (u + 1.0);
    const double coherence_branch =
        4.0 * alpha2 * alpha2 * (alpha2 - 1.0) * (alpha2 - 1.0);
    return std::min(diagonal_branch, coherence_branch);
}

double purity(const TwoQubitState& rho) { return (rho.rho() * rho.rho()).trace().real(); }

double concurrence(const TwoQubitState& rho) {
    static const Matrix4cd yy = kron2(pauli(1), pauli(1));
    const Matrix4cd r = rho.rho() * yy * rho.rho().conjugate() * yy;
    Eigen::ComplexEigenSolver<Matrix4cd> es(r, false);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i)
        lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

std::string DiscordReport::to_json() const {
    nlohmann::json j;
    j["ds_lower"] = ds_lower;
    j["ds_upper"] = ds_upper;
    j["purity"] = purity;
    j["d_lower"] = d_lower;
    j["d_upper"] = d_upper;
    j["concurrence"] = concurrence;
    return j.dump();
}

DiscordReport discord_report(const TwoQubitState& rho) {
    DiscordReport rep;
    rep.ds_lower = geometric_discord_lower(rho);
    rep.ds_upper = geometric_discord_upper(rho);
    rep.purity = purity(rho);
    rep.d_lower = rescaled_discord(rep.ds_lower, rep.purity);
    rep.d_upper = rescaled_discord(rep.ds_upper, rep.purity);
    rep.concurrence = concurrence(rho);
    return rep;
}

} // namespace dqd
