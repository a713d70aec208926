#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dqd/correlations.hpp"
#include "dqd/state.hpp"
#include "test_support.hpp"

using namespace dqd;
using dqd::test::Rng;

namespace {

// frozen from a 40-digit evaluation of the rescaled-discord formula
constexpr double k_ref_rescaled_spot = 0.158884196878501149;

TwoQubitState bell_phi_plus() {
    Eigen::Vector4cd v;
    v << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
    return TwoQubitState(v * v.adjoint());
}

TwoQubitState maximally_mixed() { return TwoQubitState(Matrix4cd::Identity() * 0.25); }

} // namespace

TEST_CASE("bloch decomposition: canonical states") {
    SUBCASE("maximally mixed") {
        const auto b = bloch_decompose(maximally_mixed());
        CHECK(b.x_vec.norm() < 1e-14);
        CHECK(b.y_vec.norm() < 1e-14);
        CHECK(b.t_mat.norm() < 1e-14);
    }
    SUBCASE("Bell projector") {
        const auto b = bloch_decompose(bell_phi_plus());
        CHECK(b.x_vec.norm() < 1e-14);
        CHECK(b.y_vec.norm() < 1e-14);
        CHECK(b.t_mat(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(b.t_mat(1, 1) == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(b.t_mat(2, 2) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(b.t_mat(0, 1)) < 1e-14);
    }
    SUBCASE("product states have rank-1 correlation matrix T = x y^T") {
        Rng rng(23);
        for (int i = 0; i < 10; ++i) {
            std::normal_distribution<double> n(0.0, 1.0);
            Complex al(n(rng), n(rng)), be(n(rng), n(rng));
            const double norm = std::sqrt(std::norm(al) + std::norm(be));
            const auto s = pure_product_state(al / norm, be / norm);
            const auto b = bloch_decompose(s);
            CHECK((b.t_mat - b.x_vec * b.y_vec.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("bloch reconstruction identity") {
    Rng rng(29);
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd sig[3];
    sig[0] << 0, 1, 1, 0;
    sig[1] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    sig[2] << 1, 0, 0, -1;
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = dqd::test::random_mixed_state(rng);
        const auto b = bloch_decompose(s);
        Matrix4cd rebuilt = dqd::test::kron2(id, id);
        for (int i = 0; i < 3; ++i) {
            rebuilt += b.x_vec[i] * dqd::test::kron2(sig[i], id);
            rebuilt += b.y_vec[i] * dqd::test::kron2(id, sig[i]);
            for (int j = 0; j < 3; ++j)
                rebuilt += b.t_mat(i, j) * dqd::test::kron2(sig[i], sig[j]);
        }
        rebuilt *= 0.25;
        CHECK((rebuilt - s.rho()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(b.x_vec.norm() <= 1.0 + 1e-12);
        CHECK(b.y_vec.norm() <= 1.0 + 1e-12);
        CHECK(b.t_mat.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
    }
}

TEST_CASE("geometric discord bounds: calibration states") {
    SUBCASE("product states carry no discord") {
        const auto s = pure_product_state(0.6, 0.8);
        CHECK(geometric_discord_lower(s) < 1e-12);
        CHECK(geometric_discord_upper(s) < 1e-12);
    }
    SUBCASE("Bell projector saturates 1/2 on both bounds") {
        CHECK(geometric_discord_lower(bell_phi_plus()) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(geometric_discord_upper(bell_phi_plus()) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("X-state spot value 1/16") {
        const auto s = x_state(0.25, 0.25, 0.25, 0.0, 0.25);
        CHECK(geometric_discord_lower(s) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
        CHECK(geometric_discord_upper(s) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    }
    SUBCASE("maximally mixed is classical") {
        CHECK(geometric_discord_lower(maximally_mixed()) < 1e-14);
        CHECK(geometric_discord_upper(maximally_mixed()) < 1e-14);
    }
}

TEST_CASE("classical-classical states give vanishing bounds") {
    Rng rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        // random probabilities on |i><i| (x) |j><j| in random local bases
        Eigen::Vector4d p;
        for (int i = 0; i < 4; ++i) p[i] = u(rng) + 1e-3;
        p /= p.sum();
        Matrix4cd rho = Matrix4cd::Zero();
        for (int i = 0; i < 4; ++i) rho(i, i) = p[i];
        const auto ua = dqd::test::random_su2(rng);
        const auto ub = dqd::test::random_su2(rng);
        const Matrix4cd uu = dqd::test::kron2(ua, ub);
        const TwoQubitState s(uu * rho * uu.adjoint());
        CHECK(geometric_discord_lower(s) < 1e-12);
        CHECK(geometric_discord_upper(s) < 1e-12);
    }
}

TEST_CASE("lower bound never exceeds upper bound") {
    Rng rng(37);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto s = (trial % 2 == 0) ? dqd::test::random_pure_state(rng)
                                        : dqd::test::random_mixed_state(rng);
        const double lo = geometric_discord_lower(s);
        const double hi = geometric_discord_upper(s);
        CHECK(lo <= hi + 1e-12);
        CHECK(lo >= -1e-14);
        CHECK(hi <= 0.5 + 1e-10);
    }
}

TEST_CASE("bounds are invariant under local unitaries") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = dqd::test::random_mixed_state(rng);
        const Matrix4cd uu = dqd::test::kron2(dqd::test::random_su2(rng),
                                              dqd::test::random_su2(rng));
        const TwoQubitState rotated(uu * s.rho() * uu.adjoint());
        CHECK(std::abs(geometric_discord_lower(rotated) - geometric_discord_lower(s)) < 1e-10);
        CHECK(std::abs(geometric_discord_upper(rotated) - geometric_discord_upper(s)) < 1e-10);
    }
}

TEST_CASE("rescaled discord") {
    CHECK(rescaled_discord(0.0, 0.7) == 0.0);
    CHECK(rescaled_discord(0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rescaled_discord(1.0 / 16.0, 3.0 / 8.0) ==
          doctest::Approx(k_ref_rescaled_spot).epsilon(1e-12));
    // monotone in ds at fixed purity
    double prev = -1.0;
    for (double ds = 0.0; ds <= 0.5; ds += 0.05) {
        const double d = rescaled_discord(ds, 0.5);
        CHECK(d > prev);
        prev = d;
    }
    CHECK_THROWS_AS(rescaled_discord(0.9, 0.4), std::domain_error);
    CHECK_THROWS_AS(rescaled_discord(-0.1, 0.4), std::domain_error);
}

TEST_CASE("rescaled discord of the Werner family follows the analytic curve") {
    // rho_p = p |Bell><Bell| + (1-p) I/4: ds = p^2/2, purity = (1+3p^2)/4.
    const auto bell = bell_phi_plus();
    for (double p : {0.2, 0.5, 0.8, 1.0}) {
        const Matrix4cd rho = p * bell.rho() + (1.0 - p) * Matrix4cd::Identity() * 0.25;
        const TwoQubitState s(rho);
        const double ds = geometric_discord_lower(s);
        CHECK(ds == doctest::Approx(p * p / 2.0).epsilon(1e-12));
        const double analytic = 0.5 / (1.0 - std::sqrt(3.0) / 2.0) *
                                (1.0 - std::sqrt(1.0 - p * p / (1.0 + 3.0 * p * p)));
        CHECK(rescaled_discord(ds, purity(s)) == doctest::Approx(analytic).epsilon(1e-12));
    }
}

TEST_CASE("X-state closed form equals the lower bound on random X states") {
    Rng rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = dqd::test::random_x_params(rng);
        const auto s = x_state(p.a, p.b, p.c, p.x, p.y);
        const double closed = x_state_geometric_discord(p.a, p.b, p.c, p.x, p.y);
        CHECK(geometric_discord_lower(s) == doctest::Approx(closed).epsilon(1e-10));
    }
}

TEST_CASE("X-state upper bound: coincidence pattern of the closed formulas") {
    // The two bounds coincide whenever the balanced-diagonal eigenvalue
    // (a-c)^2 + (a-2b+c)^2 dominates 4(|y|+|x|)^2 (coherence branch) or when
    // a = c; otherwise the upper bound exceeds the lower by exactly
    // 1/4 min((a-c)^2, 4(|y|+|x|)^2).
    Rng rng(47);
    int coincide = 0, gapped = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = dqd::test::random_x_params(rng);
        const double w2 = (p.a - p.c) * (p.a - p.c);
        const double lam1 = 4.0 * std::pow(std::abs(p.y) + std::abs(p.x), 2);
        const double lam3 = w2 + std::pow(p.a - 2.0 * p.b + p.c, 2);
        if (std::abs(lam3 - lam1) < 1e-9) continue; // skip near-degenerate draws
        const auto s = x_state(p.a, p.b, p.c, p.x, p.y);
        const double lo = geometric_discord_lower(s);
        const double hi = geometric_discord_upper(s);
        const double expected_gap = (lam3 > lam1) ? 0.0 : 0.25 * std::min(w2, lam1);
        CHECK(hi - lo == doctest::Approx(expected_gap).epsilon(1e-8));
        (expected_gap == 0.0 ? coincide : gapped)++;
    }
    CHECK(coincide > 50);
    CHECK(gapped > 50); // both regimes genuinely exercised
}

TEST_CASE("balanced X states (a = c) have coinciding bounds") {
    Rng rng(53);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double b = 0.5 * u(rng);
        const double a = 0.5 * (1.0 - 2.0 * b);
        const Complex x = b * u(rng) * dqd::test::random_unit_phase(rng);
        const Complex y = a * u(rng) * dqd::test::random_unit_phase(rng);
        const auto s = x_state(a, b, a, x, y);
        const double lo = geometric_discord_lower(s);
        const double hi = geometric_discord_upper(s);
        CHECK(hi - lo < 1e-10);
        CHECK(lo == doctest::Approx(x_state_geometric_discord(a, b, a, x, y)).epsilon(1e-10));
    }
}

TEST_CASE("x_state_geometric_discord branch arithmetic") {
    CHECK(x_state_geometric_discord(0.25, 0.25, 0.25, 0.0, 0.25) ==
          doctest::Approx(1.0 / 16.0).epsilon(1e-14));
    CHECK(x_state_geometric_discord(0.5, 0.0, 0.5, 0.0, 0.5) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(x_state_geometric_discord(0.25, 0.25, 0.25, 0.25, 0.25) < 1e-14);
}

TEST_CASE("initial X discord") {
    CHECK(initial_x_discord(0.0) == 0.0);
    CHECK(initial_x_discord(0.5) == 0.0);
    CHECK(initial_x_discord(1.0) == 0.0);
    CHECK(initial_x_discord(0.25) == doctest::Approx(5.0 / 64.0).epsilon(1e-14));
    // cross-module equality with the assembled matrix
    for (int i = 0; i <= 10; ++i) {
        const double a2 = 0.1 * i;
        const auto s = initial_x_from_alpha(a2);
        CHECK(initial_x_discord(a2) ==
              doctest::Approx(geometric_discord_lower(s)).epsilon(1e-12));
        CHECK(initial_x_discord(a2) ==
              doctest::Approx(x_state_geometric_discord(
                                  s(0, 0).real(), s(1, 1).real(), s(3, 3).real(), s(1, 2),
                                  s(0, 3)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("purity") {
    CHECK(purity(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(purity(maximally_mixed()) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(purity(x_state(0.25, 0.25, 0.25, 0.0, 0.25)) ==
          doctest::Approx(3.0 / 8.0).epsilon(1e-14));
    Rng rng(59);
    for (int i = 0; i < 50; ++i) {
        const double p = purity(dqd::test::random_mixed_state(rng));
        CHECK(p >= 0.25 - 1e-12);
        CHECK(p <= 1.0 + 1e-12);
    }
}

TEST_CASE("concurrence") {
    CHECK(concurrence(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(pure_product_state(0.6, 0.8)) < 1e-12);
    CHECK(concurrence(maximally_mixed()) == 0.0);
    // Werner family: entangled iff p > 1/3, C = max(0, (3p-1)/2)
    const auto bell = bell_phi_plus();
    for (double p : {0.2, 0.5, 0.9}) {
        const TwoQubitState s(p * bell.rho() + (1.0 - p) * Matrix4cd::Identity() * 0.25);
        CHECK(concurrence(s) ==
              doctest::Approx(std::max(0.0, (3.0 * p - 1.0) / 2.0)).epsilon(1e-10));
    }
}

TEST_CASE("discord report is internally consistent") {
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        const auto s = dqd::test::random_mixed_state(rng);
        const auto rep = discord_report(s);
        CHECK(rep.ds_lower <= rep.ds_upper + 1e-12);
        CHECK(rep.d_lower <= rep.d_upper + 1e-12);
        CHECK(rep.purity >= 0.25 - 1e-12);
        CHECK(rep.purity <= 1.0 + 1e-12);
        CHECK(rep.d_lower == doctest::Approx(rescaled_discord(rep.ds_lower, rep.purity)));
        CHECK(rep.ds_upper <= 0.5 + 1e-10);
        CHECK(rep.d_upper <= 0.5 + 1e-10);
        CHECK(rep.to_json().find("ds_lower") != std::string::npos);
    }
}
