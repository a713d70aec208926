#include "dqd/state.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "dqd/errors.hpp"

namespace dqd {
namespace {

constexpr double k_herm_tol = 1e-12;
constexpr double k_trace_tol = 1e-12;
constexpr double k_psd_floor = -1e-10;

void validate_state(const Matrix4cd& rho) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(rho(i, j) - std::conj(rho(j, i))) > k_herm_tol)
                throw ConfigError("TwoQubitState: matrix is not Hermitian to 1e-12");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > k_trace_tol)
        throw ConfigError("TwoQubitState: trace differs from 1 by more than 1e-12");
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < k_psd_floor)
        throw ConfigError("TwoQubitState: negative eigenvalue below -1e-10");
}

} // namespace

TwoQubitState::TwoQubitState(const Matrix4cd& rho) : rho_(rho) { validate_state(rho_); }

TwoQubitState TwoQubitState::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("state JSON parse error: ") + e.what());
    }
    if (!j.is_array() || j.size() != 4)
        throw ConfigError("state JSON must be a 4x4 array of [re, im] pairs");
    Matrix4cd rho;
    for (int i = 0; i < 4; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != 4)
            throw ConfigError("state JSON must be a 4x4 array of [re, im] pairs");
        for (int k = 0; k < 4; ++k) {
            const auto& cell = row[k];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw ConfigError("state JSON cells must be [re, im] number pairs");
            rho(i, k) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return TwoQubitState(rho);
}

std::string TwoQubitState::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < 4; ++k)
            row.push_back({rho_(i, k).real(), rho_(i, k).imag()});
        j.push_back(row);
    }
    return j.dump();
}

TwoQubitState pure_product_state(Complex alpha, Complex beta) {
    const double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > 1e-12)
        throw ConfigError("pure_product_state: |alpha|^2 + |beta|^2 must be 1 to 1e-12");
    Eigen::Vector4cd v;
    v << alpha * alpha, alpha * beta, alpha * beta, beta * beta;
    return TwoQubitState(v * v.adjoint());
}

TwoQubitState x_state(double a, double b, double c, Complex x, Complex y) {
    if (std::abs(a + 2.0 * b + c - 1.0) > 1e-12)
        throw ConfigError("x_state: a + 2b + c must equal 1");
    if (a < 0.0 || b < 0.0 || c < 0.0)
        throw ConfigError("x_state: diagonal entries must be non-negative");
    if (b * b - std::norm(x) < -1e-12)
        throw ConfigError("x_state: inner block not positive semidefinite (b >= |x| violated)");
    if (a * c - std::norm(y) < -1e-12)
        throw ConfigError("x_state: outer block not positive semidefinite (ac >= |y|^2 violated)");
    Matrix4cd rho = Matrix4cd::Zero();
    rho(0, 0) = a;
    rho(1, 1) = b;
    rho(2, 2) = b;
    rho(3, 3) = c;
    rho(0, 3) = y;
    rho(3, 0) = std::conj(y);
    rho(1, 2) = x;
    rho(2, 1) = std::conj(x);
    return TwoQubitState(rho);
}

TwoQubitState initial_x_from_alpha(double alpha2) {
    if (!(alpha2 >= 0.0 && alpha2 <= 1.0))
        throw ConfigError("initial_x_from_alpha: alpha2 must lie in [0, 1]");
    const double b = alpha2 * (1.0 - alpha2);
    return x_state(alpha2 * alpha2, b, (1.0 - alpha2) * (1.0 - alpha2), b, b);
}

} // namespace dqd
