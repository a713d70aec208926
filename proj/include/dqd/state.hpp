// state.hpp — two-qubit density matrices and the initial states of the model
#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace dqd {

using Matrix4cd = Eigen::Matrix4cd;
using Complex = std::complex<double>;

// Density matrix in the basis |0>=|0_L 0_R>, |1>=|0_L 1_R>, |2>=|1_L 0_R>,
// |3>=|1_L 1_R> (left qubit is the first tensor factor). Construction
// validates hermiticity (1e-12), unit trace (1e-12) and positivity
// (eigenvalues >= -1e-10).
class TwoQubitState {
public:
    explicit TwoQubitState(const Matrix4cd& rho);

    const Matrix4cd& rho() const { return rho_; }
    Complex operator()(int i, int j) const { return rho_(i, j); }

    // JSON round trip; format is a 4x4 array of [re, im] pairs.
    static TwoQubitState from_json(const std::string& text);
    std::string to_json() const;

private:
    Matrix4cd rho_;
};

// |Psi>_L (X) |Psi>_R with |Psi> = alpha|0> + beta|1>; requires
// |alpha|^2 + |beta|^2 = 1 to 1e-12. Zero discord at t = 0.
TwoQubitState pure_product_state(Complex alpha, Complex beta);

// X-shaped state with diagonal (a, b, b, c), outer coherence y = rho_03 and
// inner coherence x = rho_12. Requires a + 2b + c = 1, b >= |x| (inner
// block) and a c >= |y|^2 (outer block).
TwoQubitState x_state(double a, double b, double c, Complex x, Complex y);

// The X-state that shares diagonal and outer coherence magnitudes with the
// pure product state of occupation alpha2: a = alpha2^2, b = x = y =
// alpha2 (1 - alpha2), c = (1 - alpha2)^2. Saturates both positivity bounds.
TwoQubitState initial_x_from_alpha(double alpha2);

} // namespace dqd
