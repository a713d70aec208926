#include "dqd/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "dqd/correlations.hpp"
#include "dqd/errors.hpp"
#include "dqd/propagate.hpp"
#include "dqd/state.hpp"
#include "dqd/version.hpp"

namespace dqd {
namespace {

using nlohmann::json;

constexpr double k_inv_sqrt2 = 0.70710678118654752440;

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

template <typename T>
void read_field(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

MaterialParams parse_material(const json& j) {
    reject_unknown_keys(j, {"sigma_e", "sigma_h", "sound_speed", "mass_density",
                            "l_e", "l_h", "l_z"},
                        "material");
    MaterialParams m;
    read_field(j, "sigma_e", m.sigma_e);
    read_field(j, "sigma_h", m.sigma_h);
    read_field(j, "sound_speed", m.sound_speed);
    read_field(j, "mass_density", m.mass_density);
    read_field(j, "l_e", m.l_e);
    read_field(j, "l_h", m.l_h);
    read_field(j, "l_z", m.l_z);
    return m;
}

SpectralGrid parse_grid(const json& j) {
    reject_unknown_keys(j, {"k_perp_max", "k_z_max", "n_perp", "n_z", "azimuthal_mode", "n_phi"},
                        "grid");
    SpectralGrid g;
    read_field(j, "k_perp_max", g.k_perp_max);
    read_field(j, "k_z_max", g.k_z_max);
    read_field(j, "n_perp", g.n_perp);
    read_field(j, "n_z", g.n_z);
    read_field(j, "n_phi", g.n_phi);
    if (j.contains("azimuthal_mode")) {
        const std::string mode = j.at("azimuthal_mode").get<std::string>();
        if (mode == "bessel_reduction")
            g.azimuthal_mode = AzimuthalMode::bessel_reduction;
        else if (mode == "trapezoid")
            g.azimuthal_mode = AzimuthalMode::trapezoid;
        else
            throw ConfigError("grid.azimuthal_mode must be \"bessel_reduction\" or \"trapezoid\"");
    }
    return g;
}

Experiment parse_experiment(const std::string& name) {
    if (name == "fig1_grid") return Experiment::fig1_grid;
    if (name == "coherence_traces") return Experiment::coherence_traces;
    if (name == "steady_state_vs_alpha2") return Experiment::steady_state_vs_alpha2;
    if (name == "single_state") return Experiment::single_state;
    throw ConfigError("unknown experiment \"" + name + "\"");
}

const char* experiment_name(Experiment e) {
    switch (e) {
        case Experiment::fig1_grid: return "fig1_grid";
        case Experiment::coherence_traces: return "coherence_traces";
        case Experiment::steady_state_vs_alpha2: return "steady_state_vs_alpha2";
        case Experiment::single_state: return "single_state";
    }
    return "?";
}

std::vector<double> sorted_temperatures(const SweepConfig& c) {
    std::vector<double> t = c.temperatures_K;
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<double> log_time_grid(double t_max, std::size_t n) {
    // t = 0 plus n log-spaced points over [t_max/1000, t_max]
    std::vector<double> times{0.0};
    const double lo = std::log10(t_max / 1000.0);
    const double hi = std::log10(t_max);
    for (std::size_t i = 0; i < n; ++i)
        times.push_back(std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) /
                                               static_cast<double>(n - 1)));
    return times;
}

std::vector<double> linear_time_grid(double t_max, std::size_t n) {
    std::vector<double> times(n);
    for (std::size_t i = 0; i < n; ++i)
        times[i] = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    return times;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

std::size_t row_count(const std::string& csv) {
    std::size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    return rows > 0 ? rows - 1 : 0; // minus header
}

struct ManifestBuilder {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    RunManifest manifest;

    explicit ManifestBuilder(const SweepConfig& config) {
        manifest.config_json = config.to_json();
        manifest.version = k_version;
    }

    void add(const std::string& name, std::size_t rows) { manifest.outputs.push_back({name, rows}); }

    RunManifest finish(const SweepConfig& config) {
        BathSpec probe{sorted_temperatures(config).front(), k_boltzmann, k_hbar};
        manifest.grid_convergence =
            grid_convergence_indicator(probe, config.distance_nm, config.material, config.grid);
        manifest.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const auto tmp = config.output_dir / "manifest.json.tmp";
        write_file(tmp, manifest.to_json());
        std::error_code ec;
        std::filesystem::rename(tmp, config.output_dir / "manifest.json", ec);
        if (ec) throw IoError("cannot finalize manifest.json: " + ec.message());
        return manifest;
    }
};

void prepare_output_dir(const SweepConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw IoError("cannot create output directory " + config.output_dir.string() + ": " +
                          ec.message());
}

std::string temperature_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

DiscordReport rescaled_pair(const TwoQubitState& state) { return discord_report(state); }

} // namespace

std::string format_csv_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> SweepConfig::default_alpha2_values() {
    std::vector<double> v(41);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i) / 40.0;
    return v;
}

void SweepConfig::validate() const {
    material.validate();
    grid.validate();
    if (!(distance_nm >= 0.0)) throw ConfigError("distance_nm must be >= 0");
    if (!(t_max_ps > 0.0)) throw ConfigError("t_max_ps must be positive");
    if (n_times < 2) throw ConfigError("n_times must be at least 2");
    if (temperatures_K.empty()) throw ConfigError("temperatures_K must not be empty");
    for (double t : temperatures_K)
        if (!(t >= 0.0)) throw ConfigError("temperatures must be >= 0");
    for (double a : alpha2_values)
        if (!(a >= 0.0 && a <= 1.0)) throw ConfigError("alpha2 values must lie in [0, 1]");
    if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

SweepConfig SweepConfig::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown_keys(j, {"material", "grid", "distance_nm", "experiment", "t_max_ps",
                            "n_times", "temperatures_K", "alpha2_values", "output_dir"},
                        "config");
    SweepConfig c;
    if (j.contains("material")) c.material = parse_material(j.at("material"));
    if (j.contains("grid")) c.grid = parse_grid(j.at("grid"));
    read_field(j, "distance_nm", c.distance_nm);
    if (j.contains("experiment"))
        c.experiment = parse_experiment(j.at("experiment").get<std::string>());
    read_field(j, "t_max_ps", c.t_max_ps);
    read_field(j, "n_times", c.n_times);
    read_field(j, "temperatures_K", c.temperatures_K);
    read_field(j, "alpha2_values", c.alpha2_values);
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    c.validate();
    return c;
}

std::string SweepConfig::to_json() const {
    json j;
    j["material"] = {{"sigma_e", material.sigma_e},   {"sigma_h", material.sigma_h},
                     {"sound_speed", material.sound_speed}, {"mass_density", material.mass_density},
                     {"l_e", material.l_e},           {"l_h", material.l_h},
                     {"l_z", material.l_z}};
    j["grid"] = {{"k_perp_max", grid.k_perp_max},
                 {"k_z_max", grid.k_z_max},
                 {"n_perp", grid.n_perp},
                 {"n_z", grid.n_z},
                 {"azimuthal_mode", grid.azimuthal_mode == AzimuthalMode::bessel_reduction
                                        ? "bessel_reduction"
                                        : "trapezoid"},
                 {"n_phi", grid.n_phi}};
    j["distance_nm"] = distance_nm;
    j["experiment"] = experiment_name(experiment);
    j["t_max_ps"] = t_max_ps;
    j["n_times"] = n_times;
    j["temperatures_K"] = temperatures_K;
    j["alpha2_values"] = alpha2_values;
    j["output_dir"] = output_dir.string();
    return j.dump(2);
}

std::string RunManifest::to_json() const {
    json j;
    j["config"] = json::parse(config_json);
    j["version"] = version;
    j["grid_convergence"] = grid_convergence;
    j["wall_time_s"] = wall_time_s;
    j["outputs"] = json::array();
    for (const auto& f : outputs)
        j["outputs"].push_back({{"file", f.name}, {"rows", f.rows}});
    return j.dump(2);
}

RunManifest run_fig1_grid(const SweepConfig& config) {
    config.validate();
    prepare_output_dir(config);
    ManifestBuilder mb(config);

    const std::vector<double> times = log_time_grid(config.t_max_ps, config.n_times);
    const std::vector<double> temps = sorted_temperatures(config);
    const auto kernels =
        compute_kernel_batch(times, temps, config.distance_nm, config.material, config.grid);
    const TwoQubitState rho0 = pure_product_state(k_inv_sqrt2, k_inv_sqrt2);

    std::string csv = "t_ps,T_K,discord_lower,discord_upper\n";
    for (std::size_t it = 0; it < times.size(); ++it) {
        for (std::size_t q = 0; q < temps.size(); ++q) {
            const TwoQubitState evolved = propagate(rho0, kernels[q], it);
            const DiscordReport rep = rescaled_pair(evolved);
            csv += format_csv_value(times[it]) + "," + format_csv_value(temps[q]) + "," +
                   format_csv_value(rep.d_lower) + "," + format_csv_value(rep.d_upper) + "\n";
        }
    }
    write_file(config.output_dir / "fig1.csv", csv);
    mb.add("fig1.csv", row_count(csv));
    return mb.finish(config);
}

RunManifest run_coherence_traces(const SweepConfig& config) {
    config.validate();
    prepare_output_dir(config);
    ManifestBuilder mb(config);

    const std::vector<double> times = linear_time_grid(config.t_max_ps, config.n_times);
    const std::vector<double> temps = sorted_temperatures(config);
    const auto kernels =
        compute_kernel_batch(times, temps, config.distance_nm, config.material, config.grid);
    const TwoQubitState pure0 = pure_product_state(k_inv_sqrt2, k_inv_sqrt2);
    const TwoQubitState x0 = x_state(0.25, 0.25, 0.25, 0.25, 0.25);

    for (std::size_t q = 0; q < temps.size(); ++q) {
        std::string csv = "t_ps,n01,n03,n12,discord_pure_lo,discord_pure_hi,discord_x\n";
        for (std::size_t it = 0; it < times.size(); ++it) {
            const auto coh = normalized_coherences(pure0, kernels[q], it);
            const TwoQubitState pure_t = propagate(pure0, kernels[q], it);
            const DiscordReport rep = rescaled_pair(pure_t);
            const TwoQubitState x_t = propagate(x0, kernels[q], it);
            const double ds_x = x_state_geometric_discord(
                x_t(0, 0).real(), x_t(1, 1).real(), x_t(3, 3).real(), x_t(1, 2), x_t(0, 3));
            const double d_x = rescaled_discord(ds_x, purity(x_t));
            csv += format_csv_value(times[it]) + "," + format_csv_value(coh.at({0, 1})) + "," +
                   format_csv_value(coh.at({0, 3})) + "," + format_csv_value(coh.at({1, 2})) +
                   "," + format_csv_value(rep.d_lower) + "," + format_csv_value(rep.d_upper) +
                   "," + format_csv_value(d_x) + "\n";
        }
        const std::string name = "traces_T" + temperature_label(temps[q]) + ".csv";
        write_file(config.output_dir / name, csv);
        mb.add(name, row_count(csv));
    }
    return mb.finish(config);
}

RunManifest run_steady_state(const SweepConfig& config) {
    config.validate();
    prepare_output_dir(config);
    ManifestBuilder mb(config);

    const std::vector<double> temps = sorted_temperatures(config);
    const auto asym = asymptotic_b_batch(temps, config.distance_nm, config.material, config.grid);

    std::string csv = "alpha2,T_K,pure_lo,pure_hi,x_lo,x_hi\n";
    for (double a2 : config.alpha2_values) {
        const TwoQubitState pure0 = pure_product_state(std::sqrt(a2), std::sqrt(1.0 - a2));
        const TwoQubitState x0 = initial_x_from_alpha(a2);
        for (std::size_t q = 0; q < temps.size(); ++q) {
            const DiscordReport rp = rescaled_pair(propagate_asymptotic(pure0, asym[q]));
            const DiscordReport rx = rescaled_pair(propagate_asymptotic(x0, asym[q]));
            csv += format_csv_value(a2) + "," + format_csv_value(temps[q]) + "," +
                   format_csv_value(rp.d_lower) + "," + format_csv_value(rp.d_upper) + "," +
                   format_csv_value(rx.d_lower) + "," + format_csv_value(rx.d_upper) + "\n";
        }
    }
    write_file(config.output_dir / "steady.csv", csv);
    mb.add("steady.csv", row_count(csv));
    return mb.finish(config);
}

RunManifest run_single_state(const SweepConfig& config, const std::filesystem::path& state_file) {
    config.validate();
    std::ifstream in(state_file);
    if (!in) throw IoError("cannot read state file " + state_file.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const TwoQubitState rho0 = TwoQubitState::from_json(text);

    prepare_output_dir(config);
    ManifestBuilder mb(config);

    const std::vector<double> times = linear_time_grid(config.t_max_ps, config.n_times);
    const std::vector<double> temps = sorted_temperatures(config);
    const auto kernels =
        compute_kernel_batch(times, temps, config.distance_nm, config.material, config.grid);

    json out = json::array();
    for (std::size_t q = 0; q < temps.size(); ++q) {
        for (std::size_t it = 0; it < times.size(); ++it) {
            const DiscordReport rep = rescaled_pair(propagate(rho0, kernels[q], it));
            json item;
            item["t_ps"] = times[it];
            item["T_K"] = temps[q];
            item["report"] = json::parse(rep.to_json());
            out.push_back(item);
        }
    }
    write_file(config.output_dir / "discord_reports.json", out.dump(2));
    mb.add("discord_reports.json", out.size());
    return mb.finish(config);
}

RunManifest run_kernel_export(const SweepConfig& config) {
    config.validate();
    prepare_output_dir(config);
    ManifestBuilder mb(config);

    const std::vector<double> times = linear_time_grid(config.t_max_ps, config.n_times);
    const std::vector<double> temps = sorted_temperatures(config);
    const auto kernels =
        compute_kernel_batch(times, temps, config.distance_nm, config.material, config.grid);
    for (const auto& kernel : kernels) {
        const std::string name = "kernel_T" + temperature_label(kernel.temperature) + ".csv";
        const std::string csv = kernel_to_csv(kernel);
        write_file(config.output_dir / name, csv);
        mb.add(name, row_count(csv));
    }
    return mb.finish(config);
}

RunManifest run_experiment(const SweepConfig& config, const std::filesystem::path& state_file) {
    switch (config.experiment) {
        case Experiment::fig1_grid: return run_fig1_grid(config);
        case Experiment::coherence_traces: return run_coherence_traces(config);
        case Experiment::steady_state_vs_alpha2: return run_steady_state(config);
        case Experiment::single_state: return run_single_state(config, state_file);
    }
    throw ConfigError("unhandled experiment");
}

} // namespace dqd
