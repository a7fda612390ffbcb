#include "wprn/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wprn {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

EnumerationMode enumeration_mode_from_name(const std::string& name) {
    if (name == "pruned")
        return EnumerationMode::pruned;
    if (name == "exhaustive")
        return EnumerationMode::exhaustive;
    throw std::invalid_argument("unknown enumeration mode: " + name);
}

PowerMode power_mode_from_name(const std::string& name) {
    if (name == "golden-section" || name == "golden_section")
        return PowerMode::golden_section;
    if (name == "dual-ascent" || name == "dual_ascent")
        return PowerMode::dual_ascent;
    throw std::invalid_argument("unknown power mode: " + name);
}

TimeMode time_mode_from_name(const std::string& name) {
    if (name == "substitution")
        return TimeMode::substitution;
    if (name == "dual-ascent" || name == "dual_ascent")
        return TimeMode::dual_ascent;
    throw std::invalid_argument("unknown time mode: " + name);
}

json params_to_json(const PhysicalParams& p) {
    return json{{"noise_mw", p.noise_power},
                {"conversion_efficiency", p.conversion_efficiency},
                {"relay_cost_rate_mw", p.relay_fixed_cost_rate},
                {"min_pair_time_fraction", p.min_pair_time_fraction},
                {"source_power_cap_mw", p.source_power_cap},
                {"relay_power_cap_mw", p.relay_power_cap},
                {"block_time", p.block_time}};
}

PhysicalParams params_from_json(const json& j) {
    PhysicalParams p;
    p.noise_power = j.at("noise_mw").get<double>();
    p.conversion_efficiency = j.at("conversion_efficiency").get<double>();
    p.relay_fixed_cost_rate = j.at("relay_cost_rate_mw").get<double>();
    p.min_pair_time_fraction = j.at("min_pair_time_fraction").get<double>();
    p.source_power_cap = j.at("source_power_cap_mw").get<double>();
    p.relay_power_cap = j.at("relay_power_cap_mw").get<double>();
    p.block_time = j.value("block_time", 1.0);
    return p;
}

} // namespace

AppConfig default_app_config() {
    AppConfig cfg;
    cfg.scenario.region_length = 20.0;
    cfg.scenario.region_width = 20.0;
    cfg.scenario.num_pairs = 7;
    cfg.scenario.fading_model = FadingModel::rayleigh;
    PhysicalParams& p = cfg.scenario.params;
    p.noise_power = dbm_to_mw(-95.0);
    p.conversion_efficiency = 0.5;
    p.relay_fixed_cost_rate = 0.12;
    p.min_pair_time_fraction = 0.05;
    p.source_power_cap = 10.0;
    p.relay_power_cap = 10.0;
    p.block_time = 1.0;
    cfg.seed = 1;
    return cfg;
}

AppConfig parse_app_config(const std::string& json_text) {
    const json j = json::parse(json_text);
    AppConfig cfg = default_app_config();

    cfg.scenario.region_length = j.value("region_length", cfg.scenario.region_length);
    cfg.scenario.region_width = j.value("region_width", cfg.scenario.region_width);
    cfg.scenario.num_pairs = j.value("num_pairs", cfg.scenario.num_pairs);
    if (j.contains("fading_model"))
        cfg.scenario.fading_model = fading_model_from_name(j.at("fading_model").get<std::string>());

    PhysicalParams& p = cfg.scenario.params;
    if (j.contains("noise_dbm"))
        p.noise_power = dbm_to_mw(j.at("noise_dbm").get<double>());
    p.conversion_efficiency = j.value("conversion_efficiency", p.conversion_efficiency);
    p.relay_fixed_cost_rate = j.value("relay_cost_rate_mw", p.relay_fixed_cost_rate);
    p.min_pair_time_fraction = j.value("min_pair_time_fraction", p.min_pair_time_fraction);
    p.source_power_cap = j.value("source_power_cap_mw", p.source_power_cap);
    p.relay_power_cap = j.value("relay_power_cap_mw", p.relay_power_cap);
    p.block_time = j.value("block_time", p.block_time);

    SolverConfig& s = cfg.solver;
    s.epsilon = j.value("epsilon", s.epsilon);
    s.epsilon1 = j.value("epsilon1", s.epsilon1);
    s.epsilon2 = j.value("epsilon2", s.epsilon2);
    s.max_inner_iterations = j.value("max_inner_iterations", s.max_inner_iterations);
    s.max_alternations = j.value("max_alternations", s.max_alternations);
    s.alpha_min = j.value("alpha_min", s.alpha_min);
    s.use_printed_k1 = j.value("use_printed_k1", s.use_printed_k1);
    s.debug_checks = j.value("debug_checks", s.debug_checks);
    if (j.contains("enumeration_mode"))
        s.enumeration_mode = enumeration_mode_from_name(j.at("enumeration_mode").get<std::string>());
    if (j.contains("power_mode"))
        s.power_mode = power_mode_from_name(j.at("power_mode").get<std::string>());
    if (j.contains("time_mode"))
        s.time_mode = time_mode_from_name(j.at("time_mode").get<std::string>());

    cfg.seed = j.value("seed", cfg.seed);
    cfg.scenario.validate();
    cfg.solver.validate();
    return cfg;
}

AppConfig load_app_config(const std::string& path) { return parse_app_config(read_file(path)); }

std::string instance_to_json(const NetworkInstance& inst) {
    json j;
    j["num_pairs"] = inst.num_pairs;
    j["seed"] = inst.seed;
    j["relay_position"] = inst.relay_position;
    j["source_positions"] = inst.source_positions;
    j["destination_positions"] = inst.destination_positions;
    j["source_relay_gains"] = inst.source_relay_gains;
    j["relay_destination_gains"] = inst.relay_destination_gains;
    j["params"] = params_to_json(inst.params);
    return j.dump(2) + "\n";
}

NetworkInstance instance_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    NetworkInstance inst;
    inst.num_pairs = j.at("num_pairs").get<std::size_t>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.relay_position = j.at("relay_position").get<std::array<double, 2>>();
    inst.source_positions = j.at("source_positions").get<std::vector<std::array<double, 2>>>();
    inst.destination_positions =
        j.at("destination_positions").get<std::vector<std::array<double, 2>>>();
    inst.source_relay_gains = j.at("source_relay_gains").get<std::vector<double>>();
    inst.relay_destination_gains = j.at("relay_destination_gains").get<std::vector<double>>();
    inst.params = params_from_json(j.at("params"));
    inst.validate();
    return inst;
}

void save_instance(const NetworkInstance& inst, const std::string& path) {
    write_file(path, instance_to_json(inst));
}

NetworkInstance load_instance(const std::string& path) {
    return instance_from_json(read_file(path));
}

namespace {

json strategy_to_json(const Strategy& s) {
    return json{{"energy_power", s.energy_power},
                {"data_power", s.data_power},
                {"relay_power", s.relay_power},
                {"harvest_fraction", s.harvest_fraction},
                {"uplink_fraction", s.uplink_fraction},
                {"downlink_fraction", s.downlink_fraction}};
}

} // namespace

std::string solve_result_to_json(const SolveResult& result) {
    json j;
    j["feasible"] = result.feasible;
    j["total_alternations"] = result.total_alternations;
    if (result.feasible) {
        j["best_phi"] = *result.best_phi;
        j["best_set"] = result.best_set.members();
        j["best_strategy"] = strategy_to_json(result.best_strategy);
        j["utilities"] = json{{"pair_capacities", result.utilities.pair_capacities},
                              {"pair_utilities", result.utilities.pair_utilities},
                              {"harvested_energy", result.utilities.harvested_energy},
                              {"relay_cost", result.utilities.relay_cost},
                              {"relay_utility", result.utilities.relay_utility}};
    }
    json sets = json::array();
    for (const LabeledInnerResult& r : result.per_set_results) {
        json entry;
        entry["set"] = r.set.members();
        entry["feasible"] = r.inner.feasible;
        entry["converged"] = r.inner.converged;
        entry["alternations"] = r.inner.alternations;
        if (r.inner.phi.has_value())
            entry["phi"] = *r.inner.phi;
        json trace = json::array();
        for (const TracePoint& tp : r.inner.trace)
            trace.push_back(json::array({tp.iteration, tp.phi_power, tp.phi_time}));
        entry["trace"] = std::move(trace);
        sets.push_back(std::move(entry));
    }
    j["per_set_results"] = std::move(sets);
    return j.dump(2) + "\n";
}

void save_solve_result(const SolveResult& result, const std::string& path) {
    write_file(path, solve_result_to_json(result));
}

} // namespace wprn
