#include "wprn/dedicators.hpp"
#include "wprn/io.hpp"
#include "wprn/network.hpp"
#include "wprn/oracle.hpp"
#include "wprn/solver.hpp"
#include "wprn/utility.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wprn;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nash bargaining resource allocation for wireless-powered relay networks";

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init<>())
        .def_readwrite("noise_power", &PhysicalParams::noise_power)
        .def_readwrite("conversion_efficiency", &PhysicalParams::conversion_efficiency)
        .def_readwrite("relay_fixed_cost_rate", &PhysicalParams::relay_fixed_cost_rate)
        .def_readwrite("min_pair_time_fraction", &PhysicalParams::min_pair_time_fraction)
        .def_readwrite("source_power_cap", &PhysicalParams::source_power_cap)
        .def_readwrite("relay_power_cap", &PhysicalParams::relay_power_cap)
        .def_readwrite("block_time", &PhysicalParams::block_time);

    py::enum_<FadingModel>(m, "FadingModel")
        .value("rayleigh", FadingModel::rayleigh)
        .value("deterministic", FadingModel::deterministic);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("region_length", &ScenarioConfig::region_length)
        .def_readwrite("region_width", &ScenarioConfig::region_width)
        .def_readwrite("num_pairs", &ScenarioConfig::num_pairs)
        .def_readwrite("fading_model", &ScenarioConfig::fading_model)
        .def_readwrite("params", &ScenarioConfig::params);

    py::class_<NetworkInstance>(m, "NetworkInstance")
        .def(py::init<>())
        .def_readwrite("num_pairs", &NetworkInstance::num_pairs)
        .def_readwrite("source_positions", &NetworkInstance::source_positions)
        .def_readwrite("destination_positions", &NetworkInstance::destination_positions)
        .def_readwrite("relay_position", &NetworkInstance::relay_position)
        .def_readwrite("source_relay_gains", &NetworkInstance::source_relay_gains)
        .def_readwrite("relay_destination_gains", &NetworkInstance::relay_destination_gains)
        .def_readwrite("params", &NetworkInstance::params)
        .def_readwrite("seed", &NetworkInstance::seed)
        .def("validate", &NetworkInstance::validate);

    py::class_<Strategy>(m, "Strategy")
        .def(py::init<>())
        .def_static("zeros", &Strategy::zeros)
        .def_readwrite("energy_power", &Strategy::energy_power)
        .def_readwrite("data_power", &Strategy::data_power)
        .def_readwrite("relay_power", &Strategy::relay_power)
        .def_readwrite("harvest_fraction", &Strategy::harvest_fraction)
        .def_readwrite("uplink_fraction", &Strategy::uplink_fraction)
        .def_readwrite("downlink_fraction", &Strategy::downlink_fraction);

    py::class_<UtilityReport>(m, "UtilityReport")
        .def_readonly("pair_capacities", &UtilityReport::pair_capacities)
        .def_readonly("pair_utilities", &UtilityReport::pair_utilities)
        .def_readonly("harvested_energy", &UtilityReport::harvested_energy)
        .def_readonly("relay_cost", &UtilityReport::relay_cost)
        .def_readonly("relay_utility", &UtilityReport::relay_utility)
        .def_readonly("nash_product", &UtilityReport::nash_product);

    py::class_<ConstraintViolation>(m, "ConstraintViolation")
        .def_readonly("label", &ConstraintViolation::label)
        .def_readonly("residual", &ConstraintViolation::residual);

    py::class_<FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("feasible", &FeasibilityReport::feasible)
        .def_readonly("violations", &FeasibilityReport::violations);

    py::class_<DedicatorSet>(m, "DedicatorSet")
        .def(py::init<>())
        .def_readwrite("indicator", &DedicatorSet::indicator)
        .def("count", &DedicatorSet::count)
        .def("members", &DedicatorSet::members);

    py::enum_<EnumerationMode>(m, "EnumerationMode")
        .value("pruned", EnumerationMode::pruned)
        .value("exhaustive", EnumerationMode::exhaustive);
    py::enum_<PowerMode>(m, "PowerMode")
        .value("golden_section", PowerMode::golden_section)
        .value("dual_ascent", PowerMode::dual_ascent);
    py::enum_<TimeMode>(m, "TimeMode")
        .value("substitution", TimeMode::substitution)
        .value("dual_ascent", TimeMode::dual_ascent);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("epsilon", &SolverConfig::epsilon)
        .def_readwrite("epsilon1", &SolverConfig::epsilon1)
        .def_readwrite("epsilon2", &SolverConfig::epsilon2)
        .def_readwrite("max_inner_iterations", &SolverConfig::max_inner_iterations)
        .def_readwrite("max_alternations", &SolverConfig::max_alternations)
        .def_readwrite("enumeration_mode", &SolverConfig::enumeration_mode)
        .def_readwrite("power_mode", &SolverConfig::power_mode)
        .def_readwrite("time_mode", &SolverConfig::time_mode)
        .def_readwrite("alpha_min", &SolverConfig::alpha_min)
        .def_readwrite("use_printed_k1", &SolverConfig::use_printed_k1)
        .def_readwrite("debug_checks", &SolverConfig::debug_checks);

    py::class_<TracePoint>(m, "TracePoint")
        .def_readonly("iteration", &TracePoint::iteration)
        .def_readonly("phi_power", &TracePoint::phi_power)
        .def_readonly("phi_time", &TracePoint::phi_time);

    py::class_<InnerResult>(m, "InnerResult")
        .def_readonly("strategy", &InnerResult::strategy)
        .def_readonly("phi", &InnerResult::phi)
        .def_readonly("trace", &InnerResult::trace)
        .def_readonly("alternations", &InnerResult::alternations)
        .def_readonly("converged", &InnerResult::converged)
        .def_readonly("feasible", &InnerResult::feasible);

    py::class_<LabeledInnerResult>(m, "LabeledInnerResult")
        .def_readonly("set", &LabeledInnerResult::set)
        .def_readonly("inner", &LabeledInnerResult::inner);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("best_phi", &SolveResult::best_phi)
        .def_readonly("best_set", &SolveResult::best_set)
        .def_readonly("best_strategy", &SolveResult::best_strategy)
        .def_readonly("utilities", &SolveResult::utilities)
        .def_readonly("per_set_results", &SolveResult::per_set_results)
        .def_readonly("feasible", &SolveResult::feasible)
        .def_readonly("total_alternations", &SolveResult::total_alternations);

    py::class_<ScanReport>(m, "ScanReport")
        .def_readonly("axis", &ScanReport::axis)
        .def_readonly("grid", &ScanReport::grid)
        .def_readonly("argmax_index", &ScanReport::argmax_index)
        .def_readonly("local_maxima_count", &ScanReport::local_maxima_count)
        .def_readonly("is_unimodal", &ScanReport::is_unimodal)
        .def_readonly("is_endpoint_argmax", &ScanReport::is_endpoint_argmax);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("best_phi", &OracleResult::best_phi)
        .def_readonly("best_point", &OracleResult::best_point)
        .def_readonly("grid_resolution", &OracleResult::grid_resolution)
        .def_readonly("evaluations", &OracleResult::evaluations)
        .def_readonly("feasible_points", &OracleResult::feasible_points);

    m.def("dbm_to_mw", &dbm_to_mw, py::arg("level_dbm"));
    m.def("mean_path_gain", &mean_path_gain, py::arg("distance_m"));
    m.def("generate_scenario", &generate_scenario, py::arg("config"), py::arg("seed"));
    m.def("pair_capacity", &pair_capacity, py::arg("instance"), py::arg("strategy"), py::arg("i"));
    m.def("pair_utility", &pair_utility, py::arg("instance"), py::arg("strategy"), py::arg("i"));
    m.def("relay_utility", &relay_utility, py::arg("instance"), py::arg("strategy"));
    m.def("nash_product", &nash_product, py::arg("instance"), py::arg("strategy"));
    m.def("balance_gap", &balance_gap, py::arg("instance"), py::arg("strategy"), py::arg("i"));
    m.def("check_feasible", &check_feasible, py::arg("instance"), py::arg("strategy"));
    m.def("compute_utilities", &compute_utilities, py::arg("instance"), py::arg("strategy"));
    m.def("apply_dedicators", &apply_dedicators, py::arg("instance"), py::arg("set"));
    m.def("candidate_sets", &candidate_sets, py::arg("instance"),
          py::arg("mode") = EnumerationMode::pruned);
    m.def("solve_inner", &solve_inner, py::arg("instance"), py::arg("dedicators"), py::arg("config"),
          py::arg("warm_start") = nullptr);
    m.def("solve", &solve, py::arg("instance"), py::arg("config"));
    m.def("grid_oracle", &grid_oracle, py::arg("instance"), py::arg("dedicators"),
          py::arg("resolution"));
    m.def(
        "unimodality_scan",
        [](const NetworkInstance& inst, const Strategy& s, const std::string& axis,
           std::size_t grid) {
            const ScanAxis a =
                axis == "harvest_fraction" ? ScanAxis::harvest_fraction : ScanAxis::relay_power;
            return unimodality_scan(inst, s, a, grid);
        },
        py::arg("instance"), py::arg("strategy"), py::arg("axis"), py::arg("grid") = 1000);
    m.def("endpoint_scan_energy_power", &endpoint_scan_energy_power, py::arg("instance"),
          py::arg("strategy"), py::arg("i"), py::arg("grid") = 201);
    m.def("instance_to_json", &instance_to_json, py::arg("instance"));
    m.def("instance_from_json", &instance_from_json, py::arg("json_text"));
}
