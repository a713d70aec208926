#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "dqd/correlations.hpp"
#include "dqd/errors.hpp"
#include "dqd/kernel.hpp"
#include "dqd/propagate.hpp"
#include "test_support.hpp"

using namespace dqd;

namespace {

const double k_isq2 = 1.0 / std::sqrt(2.0);

SpectralGrid small_grid() {
    SpectralGrid g;
    g.n_perp = 256;
    g.n_z = 256;
    return g;
}

BathSpec bath_at(double t) { return BathSpec{t, k_boltzmann, k_hbar}; }

} // namespace

TEST_CASE("t = 0 returns the input bit-identically") {
    const auto k = compute_kernel({0.0, 1.0}, bath_at(100.0), 6.0, {}, small_grid());
    dqd::test::Rng rng(3);
    const auto rho0 = dqd::test::random_mixed_state(rng);
    const auto rho_t = propagate(rho0, k, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(rho_t(i, j) == rho0(i, j));
}

TEST_CASE("pure dephasing: diagonal exactly preserved, coherences shrink") {
    const auto k = compute_kernel({0.0, 0.8, 2.5}, bath_at(150.0), 6.0, {}, small_grid());
    dqd::test::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho0 = dqd::test::random_mixed_state(rng);
        for (std::size_t it : {std::size_t{1}, std::size_t{2}}) {
            const auto rho_t = propagate(rho0, k, it);
            for (int i = 0; i < 4; ++i) CHECK(rho_t(i, i) == rho0(i, i));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    CHECK(std::abs(rho_t(i, j)) <= std::abs(rho0(i, j)) + 1e-15);
        }
    }
}

TEST_CASE("d = 0 keeps |rho_12| constant") {
    const auto k = compute_kernel({0.0, 1.0, 3.0}, bath_at(200.0), 0.0, {}, small_grid());
    const auto rho0 = pure_product_state(k_isq2, k_isq2);
    for (std::size_t it = 0; it < k.size(); ++it) {
        const auto rho_t = propagate(rho0, k, it);
        CHECK(std::abs(rho_t(1, 2)) == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("X-state zero pattern is closed under propagation") {
    const auto k = compute_kernel({0.0, 1.2}, bath_at(120.0), 6.0, {}, small_grid());
    const auto x0 = x_state(0.3, 0.2, 0.3, Complex(0.1, 0.05), Complex(0.2, -0.1));
    const auto xt = propagate(x0, k, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool x_slot = (i == j) || (i + j == 3);
            if (!x_slot) CHECK(std::abs(xt(i, j)) == 0.0);
        }
    // diagonal unchanged, coherences damped by the kernel factors
    CHECK(std::abs(xt(0, 3)) ==
          doctest::Approx(std::abs(x0(0, 3)) * std::exp(k.b03[1])).epsilon(1e-12));
    CHECK(std::abs(xt(1, 2)) ==
          doctest::Approx(std::abs(x0(1, 2)) * std::exp(k.b12(1))).epsilon(1e-12));
}

TEST_CASE("separate-bath evolution factorizes into single-qubit marginals") {
    const auto k = compute_kernel({0.0, 0.9, 2.2}, bath_at(100.0), 6.0, {}, small_grid(),
                                  BathGeometry::separate);
    const auto rho0 = pure_product_state(0.6, 0.8);
    for (std::size_t it = 1; it < k.size(); ++it) {
        const auto rho_t = propagate(rho0, k, it);
        const auto product = dqd::test::kron2(dqd::test::left_marginal(rho_t.rho()),
                                              dqd::test::right_marginal(rho_t.rho()));
        CHECK(dqd::test::trace_distance(rho_t.rho(), product) < 1e-10);
        CHECK(geometric_discord_lower(rho_t) < 1e-10);
        CHECK(geometric_discord_upper(rho_t) < 1e-10);
    }
}

TEST_CASE("nonlocal phase a03 - 2 a01 is nonzero at finite distance") {
    const auto k = compute_kernel({0.3, 0.6}, bath_at(0.0), 6.0, {}, small_grid());
    CHECK(std::abs(k.a03[0] - 2.0 * k.a01[0]) > 1e-4);
    // and the phases change the discord: zeroing them is detectable
    const auto rho0 = pure_product_state(k_isq2, k_isq2);
    const auto with_phase = propagate(rho0, k, 0);
    const DephasingPoint no_phase{0.0, 0.0, k.b01[0], k.b03[0]};
    const auto without_phase = propagate_point(rho0, no_phase);
    CHECK(std::abs(geometric_discord_lower(with_phase) -
                   geometric_discord_lower(without_phase)) > 1e-8);
}

TEST_CASE("coherence decay ordering at 100 K, d = 6 nm, t = 5 ps") {
    const auto k = compute_kernel({5.0}, bath_at(100.0), 6.0, {}, small_grid());
    const auto rho0 = pure_product_state(k_isq2, k_isq2);
    const auto coh = normalized_coherences(rho0, k, 0);
    const double n01 = coh.at({0, 1});
    const double n03 = coh.at({0, 3});
    const double n12 = coh.at({1, 2});
    CHECK(n03 < n01);
    CHECK(n01 < n12);
    for (const auto& [pair, value] : coh) {
        CHECK(value > 0.0);
        CHECK(value <= 1.0);
    }
}

TEST_CASE("normalized coherences omit zero pairs and equal 1 at t = 0") {
    const auto k = compute_kernel({0.0, 1.0}, bath_at(80.0), 6.0, {}, small_grid());
    const auto x0 = x_state(0.3, 0.2, 0.3, Complex(0.0, 0.0), Complex(0.25, 0.0));
    const auto coh0 = normalized_coherences(x0, k, 0);
    CHECK(coh0.count({1, 2}) == 0); // zero initial coherence omitted
    CHECK(coh0.count({0, 1}) == 0);
    CHECK(coh0.at({0, 3}) == 1.0);
}

TEST_CASE("rho_12 dips and partially revives; onset time grows with distance") {
    std::vector<double> times;
    for (int i = 0; i <= 120; ++i) times.push_back(0.05 * i); // 0..6 ps
    const auto k6 = compute_kernel(times, bath_at(100.0), 6.0, {}, small_grid());
    const auto k12 = compute_kernel(times, bath_at(100.0), 12.0, {}, small_grid());
    const auto revival_onset = [&](const DephasingKernel& k) {
        std::size_t i_min = 0;
        double best = 2.0;
        for (std::size_t i = 1; i + 1 < k.size(); ++i) {
            const double n12 = std::exp(k.b12(i));
            if (n12 < best) {
                best = n12;
                i_min = i;
            }
        }
        // require an actual rebound after the minimum
        bool revives = false;
        for (std::size_t i = i_min + 1; i < k.size(); ++i)
            if (std::exp(k.b12(i)) > best + 1e-4) revives = true;
        REQUIRE(revives);
        return k.time_grid[i_min];
    };
    const double t6 = revival_onset(k6);
    const double t12 = revival_onset(k12);
    CHECK(t6 > 0.5);
    CHECK(t6 < 2.0); // near d/c = 1.07 ps
    CHECK(t12 > t6);
}

TEST_CASE("optional energy phase is a local unitary: discord unaffected") {
    const auto k = compute_kernel({0.0, 1.1}, bath_at(60.0), 6.0, {}, small_grid());
    const auto rho0 = pure_product_state(0.6, 0.8);
    PropagationSettings with;
    with.include_energy_phase = true;
    with.level_shift_L = 1.3;
    with.level_shift_R = -0.4;
    const auto plain = propagate(rho0, k, 1);
    const auto shifted = propagate(rho0, k, 1, with);
    CHECK(std::abs(shifted(0, 1)) == doctest::Approx(std::abs(plain(0, 1))).epsilon(1e-12));
    CHECK(geometric_discord_lower(shifted) ==
          doctest::Approx(geometric_discord_lower(plain)).epsilon(1e-9));
    CHECK(geometric_discord_upper(shifted) ==
          doctest::Approx(geometric_discord_upper(plain)).epsilon(1e-9));
    // diagonal still untouched
    for (int i = 0; i < 4; ++i) CHECK(shifted(i, i) == rho0(i, i));
}

TEST_CASE("index validation") {
    const auto k = compute_kernel({0.0, 1.0}, bath_at(60.0), 6.0, {}, small_grid());
    const auto rho0 = pure_product_state(0.6, 0.8);
    CHECK_THROWS_AS(propagate(rho0, k, 2), ConfigError);
    CHECK_THROWS_AS(normalized_coherences(rho0, k, 5), ConfigError);
}

TEST_CASE("evolved states stay physical (eigenvalue floor)") {
    const auto k = compute_kernel({0.0, 0.4, 1.5, 4.0}, bath_at(250.0), 6.0, {}, small_grid());
    dqd::test::Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const auto rho0 = dqd::test::random_mixed_state(rng);
        for (std::size_t it = 0; it < k.size(); ++it) {
            const auto rho_t = propagate(rho0, k, it); // constructor enforces PSD floor
            Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho_t.rho(), Eigen::EigenvaluesOnly);
            CHECK(es.eigenvalues().minCoeff() >= -1e-10);
        }
    }
}
