// dqdsim — phonon-induced discord sweeps for double-dot excitonic qubits.
//
// Subcommands: fig1, traces, steady, state, kernel. Each reads a JSON config
// (defaults when omitted), applies flag overrides and writes CSV/JSON
// datasets plus manifest.json into the output directory.
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dqd/errors.hpp"
#include "dqd/sweep.hpp"
#include "dqd/version.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    std::optional<double> distance_nm;
    std::optional<double> temperature_k;
    std::optional<double> alpha2;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file (defaults when omitted)");
    cmd->add_option("--out", flags.out_dir, "output directory (overrides config)");
    cmd->add_option("--distance-nm", flags.distance_nm, "override interdot distance");
    cmd->add_option("--temperature-k", flags.temperature_k,
                    "override temperature list with a single value");
    cmd->add_option("--alpha2", flags.alpha2, "override alpha^2 list with a single value");
}

dqd::SweepConfig load_config(const CommonFlags& flags, dqd::Experiment experiment) {
    dqd::SweepConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) throw dqd::IoError("cannot read config file " + flags.config_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        config = dqd::SweepConfig::from_json(text);
    }
    config.experiment = experiment;
    if (!flags.out_dir.empty()) config.output_dir = flags.out_dir;
    if (flags.distance_nm) config.distance_nm = *flags.distance_nm;
    if (flags.temperature_k) config.temperatures_K = {*flags.temperature_k};
    if (flags.alpha2) config.alpha2_values = {*flags.alpha2};
    config.validate();
    return config;
}

void print_manifest_summary(const dqd::RunManifest& manifest) {
    for (const auto& f : manifest.outputs)
        std::printf("wrote %s (%zu rows)\n", f.name.c_str(), f.rows);
    std::printf("grid convergence indicator: %.3g, wall time %.2f s\n",
                manifest.grid_convergence, manifest.wall_time_s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phonon-induced quantum discord between double-dot excitonic qubits"};
    app.set_version_flag("--version", dqd::k_version);
    app.require_subcommand(1);

    CommonFlags flags;
    std::string state_file;

    auto* fig1 = app.add_subcommand("fig1", "rescaled-discord bounds on a (t, T) grid");
    add_common_flags(fig1, flags);
    auto* traces = app.add_subcommand("traces", "normalized coherences and discord traces per T");
    add_common_flags(traces, flags);
    auto* steady = app.add_subcommand("steady", "long-time discord vs single-qubit occupation");
    add_common_flags(steady, flags);
    auto* state = app.add_subcommand("state", "discord reports for a stored density matrix");
    add_common_flags(state, flags);
    state->add_option("--state-file", state_file, "JSON density matrix (4x4 [re, im] pairs)")
        ->required();
    auto* kernel = app.add_subcommand("kernel", "export dephasing kernel tables");
    add_common_flags(kernel, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        dqd::RunManifest manifest;
        if (fig1->parsed())
            manifest = dqd::run_fig1_grid(load_config(flags, dqd::Experiment::fig1_grid));
        else if (traces->parsed())
            manifest = dqd::run_coherence_traces(load_config(flags, dqd::Experiment::coherence_traces));
        else if (steady->parsed())
            manifest = dqd::run_steady_state(load_config(flags, dqd::Experiment::steady_state_vs_alpha2));
        else if (state->parsed())
            manifest = dqd::run_single_state(load_config(flags, dqd::Experiment::single_state),
                                             state_file);
        else if (kernel->parsed())
            manifest = dqd::run_kernel_export(load_config(flags, dqd::Experiment::fig1_grid));
        print_manifest_summary(manifest);
    } catch (const dqd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const dqd::ResolutionError& e) {
        std::cerr << "resolution error: " << e.what() << "\n";
        return 3;
    } catch (const dqd::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
