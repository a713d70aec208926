// bindings.cpp — python module exposing the core operations
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dqd/correlations.hpp"
#include "dqd/errors.hpp"
#include "dqd/kernel.hpp"
#include "dqd/material.hpp"
#include "dqd/oracle.hpp"
#include "dqd/propagate.hpp"
#include "dqd/state.hpp"
#include "dqd/sweep.hpp"
#include "dqd/version.hpp"

namespace py = pybind11;
using namespace dqd;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact pure-dephasing dynamics and quantum-discord measures for two "
              "excitonic qubits sharing an acoustic-phonon bath.";
    m.attr("__version__") = k_version;
    m.attr("HBAR_MEV_PS") = k_hbar;
    m.attr("KB_MEV_K") = k_boltzmann;
    m.attr("KG_PER_M3") = units::kg_per_m3;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ResolutionError>(m, "ResolutionError", PyExc_RuntimeError);

    py::enum_<AzimuthalMode>(m, "AzimuthalMode")
        .value("bessel_reduction", AzimuthalMode::bessel_reduction)
        .value("trapezoid", AzimuthalMode::trapezoid);
    py::enum_<BathGeometry>(m, "BathGeometry")
        .value("common", BathGeometry::common)
        .value("separate", BathGeometry::separate);
    py::enum_<MeasuredSide>(m, "MeasuredSide")
        .value("left", MeasuredSide::left)
        .value("right", MeasuredSide::right);

    py::class_<MaterialParams>(m, "MaterialParams")
        .def(py::init<>())
        .def_readwrite("sigma_e", &MaterialParams::sigma_e)
        .def_readwrite("sigma_h", &MaterialParams::sigma_h)
        .def_readwrite("sound_speed", &MaterialParams::sound_speed)
        .def_readwrite("mass_density", &MaterialParams::mass_density)
        .def_readwrite("l_e", &MaterialParams::l_e)
        .def_readwrite("l_h", &MaterialParams::l_h)
        .def_readwrite("l_z", &MaterialParams::l_z)
        .def("validate", &MaterialParams::validate);

    py::class_<BathSpec>(m, "BathSpec")
        .def(py::init<>())
        .def(py::init([](double temperature) {
                 return BathSpec{temperature, k_boltzmann, k_hbar};
             }),
             py::arg("temperature"))
        .def_readwrite("temperature", &BathSpec::temperature)
        .def_readwrite("boltzmann_k", &BathSpec::boltzmann_k)
        .def_readwrite("hbar", &BathSpec::hbar);

    py::class_<SpectralGrid>(m, "SpectralGrid")
        .def(py::init<>())
        .def_readwrite("k_perp_max", &SpectralGrid::k_perp_max)
        .def_readwrite("k_z_max", &SpectralGrid::k_z_max)
        .def_readwrite("n_perp", &SpectralGrid::n_perp)
        .def_readwrite("n_z", &SpectralGrid::n_z)
        .def_readwrite("azimuthal_mode", &SpectralGrid::azimuthal_mode)
        .def_readwrite("n_phi", &SpectralGrid::n_phi);

    py::class_<DephasingKernel>(m, "DephasingKernel")
        .def_readonly("time_grid", &DephasingKernel::time_grid)
        .def_readonly("a01", &DephasingKernel::a01)
        .def_readonly("a03", &DephasingKernel::a03)
        .def_readonly("b01", &DephasingKernel::b01)
        .def_readonly("b03", &DephasingKernel::b03)
        .def_readonly("temperature", &DephasingKernel::temperature)
        .def_readonly("distance", &DephasingKernel::distance)
        .def("a13", &DephasingKernel::a13)
        .def("b12", &DephasingKernel::b12)
        .def("__len__", &DephasingKernel::size);

    py::class_<AsymptoticDephasing>(m, "AsymptoticDephasing")
        .def_readonly("b01", &AsymptoticDephasing::b01)
        .def_readonly("b03", &AsymptoticDephasing::b03)
        .def_readonly("temperature", &AsymptoticDephasing::temperature)
        .def_readonly("distance", &AsymptoticDephasing::distance)
        .def("b12", &AsymptoticDephasing::b12);

    py::class_<TwoQubitState>(m, "TwoQubitState")
        .def(py::init<const Matrix4cd&>(), py::arg("rho"))
        .def_property_readonly("rho", &TwoQubitState::rho)
        .def("to_json", &TwoQubitState::to_json)
        .def_static("from_json", &TwoQubitState::from_json);

    py::class_<PropagationSettings>(m, "PropagationSettings")
        .def(py::init<>())
        .def_readwrite("level_shift_L", &PropagationSettings::level_shift_L)
        .def_readwrite("level_shift_R", &PropagationSettings::level_shift_R)
        .def_readwrite("include_energy_phase", &PropagationSettings::include_energy_phase);

    py::class_<BlochDecomposition>(m, "BlochDecomposition")
        .def_readonly("x_vec", &BlochDecomposition::x_vec)
        .def_readonly("y_vec", &BlochDecomposition::y_vec)
        .def_readonly("t_mat", &BlochDecomposition::t_mat);

    py::class_<DiscordReport>(m, "DiscordReport")
        .def_readonly("ds_lower", &DiscordReport::ds_lower)
        .def_readonly("ds_upper", &DiscordReport::ds_upper)
        .def_readonly("purity", &DiscordReport::purity)
        .def_readonly("d_lower", &DiscordReport::d_lower)
        .def_readonly("d_upper", &DiscordReport::d_upper)
        .def_readonly("concurrence", &DiscordReport::concurrence)
        .def("to_json", &DiscordReport::to_json);

    py::class_<MeasurementGrid>(m, "MeasurementGrid")
        .def(py::init<>())
        .def_readwrite("n_theta", &MeasurementGrid::n_theta)
        .def_readwrite("n_phi", &MeasurementGrid::n_phi)
        .def_readwrite("side", &MeasurementGrid::side);

    py::class_<SandwichReport>(m, "SandwichReport")
        .def_readonly("lower", &SandwichReport::lower)
        .def_readonly("oracle_left", &SandwichReport::oracle_left)
        .def_readonly("oracle_right", &SandwichReport::oracle_right)
        .def_readonly("closed_left", &SandwichReport::closed_left)
        .def_readonly("closed_right", &SandwichReport::closed_right)
        .def_readonly("grid_tolerance", &SandwichReport::grid_tolerance)
        .def_readonly("passed", &SandwichReport::passed)
        .def_readonly("violating_state", &SandwichReport::violating_state);

    m.def("coupling_density", &coupling_density, py::arg("k_perp"), py::arg("k_z"),
          py::arg("params") = MaterialParams{});
    m.def("thermal_factor", &thermal_factor, py::arg("omega"), py::arg("bath"));
    m.def("compute_kernel", &compute_kernel, py::arg("times"), py::arg("bath"),
          py::arg("distance"), py::arg("params") = MaterialParams{},
          py::arg("grid") = SpectralGrid{}, py::arg("geometry") = BathGeometry::common);
    m.def("compute_kernel_batch", &compute_kernel_batch, py::arg("times"),
          py::arg("temperatures_K"), py::arg("distance"), py::arg("params") = MaterialParams{},
          py::arg("grid") = SpectralGrid{}, py::arg("geometry") = BathGeometry::common);
    m.def("asymptotic_b", &asymptotic_b, py::arg("bath"), py::arg("distance"),
          py::arg("params") = MaterialParams{}, py::arg("grid") = SpectralGrid{},
          py::arg("geometry") = BathGeometry::common);
    m.def("grid_convergence_indicator", &grid_convergence_indicator, py::arg("bath"),
          py::arg("distance"), py::arg("params") = MaterialParams{},
          py::arg("grid") = SpectralGrid{});
    m.def("kernel_to_csv", &kernel_to_csv);

    m.def("pure_product_state", &pure_product_state, py::arg("alpha"), py::arg("beta"));
    m.def("x_state", &x_state, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"),
          py::arg("y"));
    m.def("initial_x_from_alpha", &initial_x_from_alpha, py::arg("alpha2"));

    m.def("propagate", &propagate, py::arg("rho0"), py::arg("kernel"), py::arg("t_index"),
          py::arg("settings") = PropagationSettings{});
    m.def("propagate_point", &propagate_point, py::arg("rho0"), py::arg("point"),
          py::arg("settings") = PropagationSettings{}, py::arg("time") = 0.0);
    m.def("propagate_asymptotic", &propagate_asymptotic, py::arg("rho0"), py::arg("asym"));
    m.def("normalized_coherences", &normalized_coherences, py::arg("rho0"), py::arg("kernel"),
          py::arg("t_index"));

    py::class_<DephasingPoint>(m, "DephasingPoint")
        .def(py::init([](double a01, double a03, double b01, double b03) {
                 return DephasingPoint{a01, a03, b01, b03};
             }),
             py::arg("a01") = 0.0, py::arg("a03") = 0.0, py::arg("b01") = 0.0,
             py::arg("b03") = 0.0)
        .def_readwrite("a01", &DephasingPoint::a01)
        .def_readwrite("a03", &DephasingPoint::a03)
        .def_readwrite("b01", &DephasingPoint::b01)
        .def_readwrite("b03", &DephasingPoint::b03)
        .def("a13", &DephasingPoint::a13)
        .def("b12", &DephasingPoint::b12);

    m.def("bloch_decompose", &bloch_decompose);
    m.def("geometric_discord_lower", &geometric_discord_lower);
    m.def("geometric_discord_upper", &geometric_discord_upper);
    m.def("rescaled_discord", &rescaled_discord, py::arg("ds"), py::arg("purity"));
    m.def("x_state_geometric_discord", &x_state_geometric_discord, py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("x"), py::arg("y"));
    m.def("initial_x_discord", &initial_x_discord, py::arg("alpha2"));
    m.def("purity", &purity);
    m.def("concurrence", &concurrence);
    m.def("discord_report", &discord_report);

    m.def("oracle_one_sided", &oracle_one_sided, py::arg("rho"), py::arg("grid"));
    m.def("sandwich_check",
          py::overload_cast<const TwoQubitState&, const MeasurementGrid&>(&sandwich_check),
          py::arg("rho"), py::arg("grid"));
    m.def("sandwich_check",
          py::overload_cast<const TwoQubitState&, const MeasurementGrid&, double>(&sandwich_check),
          py::arg("rho"), py::arg("grid"), py::arg("grid_tolerance"));

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_static("from_json", &SweepConfig::from_json)
        .def("to_json", &SweepConfig::to_json)
        .def_readwrite("distance_nm", &SweepConfig::distance_nm)
        .def_readwrite("t_max_ps", &SweepConfig::t_max_ps)
        .def_readwrite("n_times", &SweepConfig::n_times)
        .def_readwrite("temperatures_K", &SweepConfig::temperatures_K)
        .def_readwrite("alpha2_values", &SweepConfig::alpha2_values)
        .def_readwrite("material", &SweepConfig::material)
        .def_readwrite("grid", &SweepConfig::grid)
        .def_property(
            "output_dir",
            [](const SweepConfig& c) { return c.output_dir.string(); },
            [](SweepConfig& c, const std::string& p) { c.output_dir = p; });

    m.def("run_fig1_grid", &run_fig1_grid);
    m.def("run_coherence_traces", &run_coherence_traces);
    m.def("run_steady_state", &run_steady_state);
    m.def("run_single_state", &run_single_state, py::arg("config"), py::arg("state_file"));

    py::class_<RunManifest>(m, "RunManifest")
        .def_readonly("version", &RunManifest::version)
        .def_readonly("grid_convergence", &RunManifest::grid_convergence)
        .def_readonly("wall_time_s", &RunManifest::wall_time_s)
        .def("to_json", &RunManifest::to_json);
}
