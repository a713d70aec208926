#include "dqd/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>
#include <vector>

#include "dqd/errors.hpp"

namespace dqd {
namespace {

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr double k_gl_x[8] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
     0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975362};
constexpr double k_gl_w[8] = {
     0.1012285362903763,  0.2223810344533745,  0.3137066458778873,  0.3626837833783620,
     0.3626837833783620,  0.3137066458778873,  0.2223810344533745,  0.1012285362903763};

// The base panel touching k = 0 is subdivided geometrically this many times
// so the 1/k thermal weight is resolved (the leftover corner scales like
// 2^-grade and stays far below the grid convergence contract).
constexpr int k_corner_grade = 12;

struct Axis {
    std::vector<double> node;
    std::vector<double> weight;
};

Axis make_axis(double kmax, std::size_t n_nodes) {
    const std::size_t panels = n_nodes / 8;
    const double h = kmax / static_cast<double>(panels);
    std::vector<std::pair<double, double>> segs;
    segs.reserve(panels + k_corner_grade);
    double lo = 0.0;
    for (int g = k_corner_grade; g >= 1; --g) {
        const double hi = h * std::ldexp(1.0, -(g - 1));
        segs.emplace_back(lo, hi);
        lo = hi;
    }
    for (std::size_t p = 1; p < panels; ++p)
        segs.emplace_back(h * static_cast<double>(p), h * static_cast<double>(p + 1));

    Axis ax;
    ax.node.reserve(segs.size() * 8);
    ax.weight.reserve(segs.size() * 8);
    for (const auto& [a, b] : segs) {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (int q = 0; q < 8; ++q) {
            ax.node.push_back(mid + half * k_gl_x[q]);
            ax.weight.push_back(half * k_gl_w[q]);
        }
    }
    return ax;
}

double bessel_j0(double x) {
    if (x == 0.0) return 1.0;
    return std::cyl_bessel_j(0.0, std::abs(x));
}

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Flattened integrand tables; everything except the thermal factor.
struct NodeTables {
    std::vector<double> w01;   // quadrature weight x V|g|^2 x measure
    std::vector<double> w03;   // w01 x azimuthal interference factor
    std::vector<double> omega; // c k (1/ps)
};

// Azimuthal average of 4 cos^2(k_x d / 2) over the in-plane angle.
double interference_factor(double k_perp, double distance, const SpectralGrid& grid,
                           BathGeometry geometry) {
    if (geometry == BathGeometry::separate) return 2.0; // cos^2 averaged to 1/2
    if (distance == 0.0) return 4.0;
    if (grid.azimuthal_mode == AzimuthalMode::bessel_reduction)
        return 2.0 * (1.0 + bessel_j0(k_perp * distance));
    KahanSum acc;
    const double dphi = 2.0 * std::numbers::pi / static_cast<double>(grid.n_phi);
    for (std::size_t m = 0; m < grid.n_phi; ++m) {
        const double c = std::cos(0.5 * k_perp * distance * std::cos(dphi * static_cast<double>(m)));
        acc.add(c * c);
    }
    return 4.0 * acc.sum / static_cast<double>(grid.n_phi);
}

NodeTables build_tables(double distance, const MaterialParams& params, const SpectralGrid& grid,
                        BathGeometry geometry) {
    params.validate();
    grid.validate();
    if (!(distance >= 0.0)) throw ConfigError("compute_kernel: distance must be >= 0");

    const Axis perp = make_axis(grid.k_perp_max, grid.n_perp);
    const Axis zax = make_axis(grid.k_z_max, grid.n_z);
    const std::size_t np = perp.node.size();
    const std::size_t nz = zax.node.size();

    // prefactor: sum_k -> 1/(2 pi)^3 int d^3k, d^3k = 2 * 2pi * kperp dkp dkz
    const double measure = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
    const double coupling_scale =
        1.0 / (2.0 * params.mass_density * k_hbar * std::pow(params.sound_speed, 3));

    std::vector<double> g2(np), az(np);
    for (std::size_t i = 0; i < np; ++i) {
        const double kp = perp.node[i];
        const double g = params.sigma_e * std::exp(-params.l_e * params.l_e * kp * kp / 4.0) -
                         params.sigma_h * std::exp(-params.l_h * params.l_h * kp * kp / 4.0);
        g2[i] = g * g;
        az[i] = interference_factor(kp, distance, grid, geometry);
    }
    std::vector<double> ez(nz);
    for (std::size_t j = 0; j < nz; ++j)
        ez[j] = std::exp(-params.l_z * params.l_z * zax.node[j] * zax.node[j] / 2.0);

    NodeTables tb;
    tb.w01.resize(np * nz);
    tb.w03.resize(np * nz);
    tb.omega.resize(np * nz);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < np; ++i) {
        const double kp = perp.node[i];
        const double row = measure * coupling_scale * perp.weight[i] * kp * g2[i];
        for (std::size_t j = 0; j < nz; ++j, ++idx) {
            const double k = std::hypot(kp, zax.node[j]);
            const double w = row * zax.weight[j] * ez[j] / k;
            tb.w01[idx] = w;
            tb.w03[idx] = w * az[i];
            tb.omega[idx] = params.sound_speed * k;
        }
    }
    return tb;
}

std::vector<double> thermal_table(const NodeTables& tb, const BathSpec& bath) {
    std::vector<double> coth(tb.omega.size());
    if (bath.temperature == 0.0) {
        std::fill(coth.begin(), coth.end(), 1.0);
    } else {
        const double scale = bath.hbar / (2.0 * bath.boltzmann_k * bath.temperature);
        for (std::size_t i = 0; i < coth.size(); ++i)
            coth[i] = 1.0 / std::tanh(scale * tb.omega[i]);
    }
    return coth;
}

void check_resolution(const std::vector<double>& times, const MaterialParams& params,
                      const SpectralGrid& grid) {
    if (times.empty()) throw ConfigError("compute_kernel: empty time grid");
    double prev = -1.0;
    for (double t : times) {
        if (!(t >= 0.0) || t <= prev)
            throw ConfigError("compute_kernel: times must be ascending and >= 0");
        prev = t;
    }
    const double t_max = times.back();
    const double quarter_pi = std::numbers::pi / 4.0;
    const auto required = [&](double kmax) {
        std::size_t n = static_cast<std::size_t>(
            std::ceil(kmax * params.sound_speed * t_max / quarter_pi));
        return ((n + 7) / 8) * 8;
    };
    const double dk_perp = grid.k_perp_max / static_cast<double>(grid.n_perp);
    const double dk_z = grid.k_z_max / static_cast<double>(grid.n_z);
    char msg[256];
    if (dk_perp * params.sound_speed * t_max > quarter_pi) {
        std::snprintf(msg, sizeof msg,
                      "grid too coarse for t_max=%g ps: need n_perp >= %zu (have %zu)",
                      t_max, required(grid.k_perp_max), grid.n_perp);
        throw ResolutionError(msg);
    }
    if (dk_z * params.sound_speed * t_max > quarter_pi) {
        std::snprintf(msg, sizeof msg,
                      "grid too coarse for t_max=%g ps: need n_z >= %zu (have %zu)",
                      t_max, required(grid.k_z_max), grid.n_z);
        throw ResolutionError(msg);
    }
}

// Accumulates one time point for all temperatures in a fixed node order.
void accumulate_time(const NodeTables& tb, const std::vector<std::vector<double>>& coth,
                     double t, double* a01, double* a03, double* b01, double* b03) {
    const std::size_t n = tb.omega.size();
    const std::size_t n_temp = coth.size();
    KahanSum s01, s03;
    std::vector<KahanSum> d01(n_temp), d03(n_temp);
    for (std::size_t i = 0; i < n; ++i) {
        const double ph = tb.omega[i] * t;
        const double s = std::sin(ph);
        const double cm1 = std::cos(ph) - 1.0;
        s01.add(tb.w01[i] * s);
        s03.add(tb.w03[i] * s);
        for (std::size_t q = 0; q < n_temp; ++q) {
            const double f = cm1 * coth[q][i];
            d01[q].add(tb.w01[i] * f);
            d03[q].add(tb.w03[i] * f);
        }
    }
    *a01 = s01.sum;
    *a03 = s03.sum;
    for (std::size_t q = 0; q < n_temp; ++q) {
        b01[q] = d01[q].sum;
        b03[q] = d03[q].sum;
    }
}

void run_over_times(const NodeTables& tb, const std::vector<std::vector<double>>& coth,
                    const std::vector<double>& times, std::vector<DephasingKernel>& out) {
    const std::size_t nt = times.size();
    const std::size_t n_temp = coth.size();
    const auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<double> b01(n_temp), b03(n_temp);
        for (std::size_t it = begin; it < end; ++it) {
            double a01 = 0.0, a03 = 0.0;
            if (times[it] == 0.0) {
                std::fill(b01.begin(), b01.end(), 0.0);
                std::fill(b03.begin(), b03.end(), 0.0);
            } else {
                accumulate_time(tb, coth, times[it], &a01, &a03, b01.data(), b03.data());
            }
            for (std::size_t q = 0; q < n_temp; ++q) {
                out[q].a01[it] = a01;
                out[q].a03[it] = a03;
                out[q].b01[it] = b01[q];
                out[q].b03[it] = b03[q];
            }
        }
    };
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t n_tasks = std::min(hw, nt);
    if (n_tasks <= 1) {
        work(0, nt);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (nt + n_tasks - 1) / n_tasks;
    for (std::size_t k = 0; k < n_tasks; ++k) {
        const std::size_t b = k * chunk;
        const std::size_t e = std::min(nt, b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
}

} // namespace

double coupling_density(double k_perp, double k_z, const MaterialParams& params) {
    if (!(k_perp >= 0.0) || !(k_z >= 0.0))
        throw std::domain_error("coupling_density: momentum components must be >= 0");
    const double k = std::hypot(k_perp, k_z);
    if (k == 0.0) return 0.0; // integrable limit
    const double form = std::exp(-params.l_z * params.l_z * k_z * k_z / 4.0) *
                        (params.sigma_e * std::exp(-params.l_e * params.l_e * k_perp * k_perp / 4.0) -
                         params.sigma_h * std::exp(-params.l_h * params.l_h * k_perp * k_perp / 4.0));
    return form * form /
           (2.0 * params.mass_density * k_hbar * std::pow(params.sound_speed, 3) * k);
}

std::vector<DephasingKernel> compute_kernel_batch(const std::vector<double>& times,
                                                  const std::vector<double>& temperatures_K,
                                                  double distance,
                                                  const MaterialParams& params,
                                                  const SpectralGrid& grid,
                                                  BathGeometry geometry) {
    if (temperatures_K.empty())
        throw ConfigError("compute_kernel_batch: no temperatures given");
    check_resolution(times, params, grid);
    const NodeTables tb = build_tables(distance, params, grid, geometry);

    std::vector<std::vector<double>> coth;
    coth.reserve(temperatures_K.size());
    std::vector<DephasingKernel> out;
    out.reserve(temperatures_K.size());
    for (double temp : temperatures_K) {
        BathSpec bath{temp, k_boltzmann, k_hbar};
        bath.validate();
        coth.push_back(thermal_table(tb, bath));
        DephasingKernel k;
        k.time_grid = times;
        k.a01.resize(times.size());
        k.a03.resize(times.size());
        k.b01.resize(times.size());
        k.b03.resize(times.size());
        k.temperature = temp;
        k.distance = distance;
        k.geometry = geometry;
        out.push_back(std::move(k));
    }
    run_over_times(tb, coth, times, out);
    return out;
}

DephasingKernel compute_kernel(const std::vector<double>& times, const BathSpec& bath,
                               double distance, const MaterialParams& params,
                               const SpectralGrid& grid, BathGeometry geometry) {
    bath.validate();
    auto batch = compute_kernel_batch(times, {bath.temperature}, distance, params, grid, geometry);
    return std::move(batch.front());
}

std::vector<AsymptoticDephasing> asymptotic_b_batch(const std::vector<double>& temperatures_K,
                                                    double distance,
                                                    const MaterialParams& params,
                                                    const SpectralGrid& grid,
                                                    BathGeometry geometry) {
    const NodeTables tb = build_tables(distance, params, grid, geometry);
    std::vector<AsymptoticDephasing> out;
    out.reserve(temperatures_K.size());
    for (double temp : temperatures_K) {
        BathSpec bath{temp, k_boltzmann, k_hbar};
        bath.validate();
        const std::vector<double> coth = thermal_table(tb, bath);
        KahanSum s01, s03;
        for (std::size_t i = 0; i < tb.w01.size(); ++i) {
            s01.add(tb.w01[i] * coth[i]);
            s03.add(tb.w03[i] * coth[i]);
        }
        out.push_back({-s01.sum, -s03.sum, temp, distance});
    }
    return out;
}

AsymptoticDephasing asymptotic_b(const BathSpec& bath, double distance,
                                 const MaterialParams& params, const SpectralGrid& grid,
                                 BathGeometry geometry) {
    bath.validate();
    return asymptotic_b_batch({bath.temperature}, distance, params, grid, geometry).front();
}

double grid_convergence_indicator(const BathSpec& bath, double distance,
                                  const MaterialParams& params, const SpectralGrid& grid) {
    SpectralGrid half = grid;
    half.n_perp = std::max<std::size_t>(16, (grid.n_perp / 2) / 8 * 8);
    half.n_z = std::max<std::size_t>(16, (grid.n_z / 2) / 8 * 8);
    const double full = asymptotic_b(bath, distance, params, grid).b01;
    const double coarse = asymptotic_b(bath, distance, params, half).b01;
    return std::abs(full - coarse) / std::max(std::abs(full), 1e-300);
}

std::string kernel_to_csv(const DephasingKernel& kernel) {
    std::string out = "t_ps,a01,a03,b01,b03,b12\n";
    char row[256];
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        std::snprintf(row, sizeof row, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      kernel.time_grid[i], kernel.a01[i], kernel.a03[i], kernel.b01[i],
                      kernel.b03[i], kernel.b12(i));
        out += row;
    }
    return out;
}

} // namespace dqd
