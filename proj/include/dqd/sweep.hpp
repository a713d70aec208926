// sweep.hpp — experiment driver: config parsing, CSV datasets, run manifest
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "dqd/kernel.hpp"
#include "dqd/material.hpp"

namespace dqd {

enum class Experiment { fig1_grid, coherence_traces, steady_state_vs_alpha2, single_state };

struct SweepConfig {
    MaterialParams material;
    SpectralGrid grid;
    double distance_nm = 6.0;
    Experiment experiment = Experiment::fig1_grid;
    double t_max_ps = 10.0;
    std::size_t n_times = 200;
    std::vector<double> temperatures_K = {0.0, 10.0, 25.0, 50.0, 100.0, 150.0, 200.0, 300.0};
    std::vector<double> alpha2_values = default_alpha2_values();
    std::filesystem::path output_dir = "out";

    void validate() const;

    static std::vector<double> default_alpha2_values(); // 0, 0.025, ..., 1
    static SweepConfig from_json(const std::string& text);
    std::string to_json() const;
};

struct OutputFile {
    std::string name;
    std::size_t rows = 0;
};

struct RunManifest {
    std::string config_json;
    std::string version;
    double grid_convergence = 0.0; // relative b01(inf) shift at half resolution
    double wall_time_s = 0.0;
    std::vector<OutputFile> outputs;

    std::string to_json() const;
};

// Experiment families. Each writes its CSVs plus manifest.json into
// config.output_dir and returns the manifest. CSV cells carry 12 significant
// digits with '.' decimal separator; identical configs give identical bytes.
RunManifest run_fig1_grid(const SweepConfig& config);
RunManifest run_coherence_traces(const SweepConfig& config);
RunManifest run_steady_state(const SweepConfig& config);
RunManifest run_single_state(const SweepConfig& config, const std::filesystem::path& state_file);

RunManifest run_kernel_export(const SweepConfig& config);

// Dispatch on config.experiment (single_state needs the extra file argument).
RunManifest run_experiment(const SweepConfig& config,
                           const std::filesystem::path& state_file = {});

std::string format_csv_value(double v); // 12 significant digits, C locale

} // namespace dqd
