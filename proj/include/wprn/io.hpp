#pragma once

#include "wprn/network.hpp"
#include "wprn/solver.hpp"
#include "wprn/solver_config.hpp"

#include <cstdint>
#include <string>

namespace wprn {

struct AppConfig {
    ScenarioConfig scenario;
    SolverConfig solver;
    std::uint64_t seed = 1;
};

// Table-I-style defaults: 20x20 m region, 7 pairs, Rayleigh fading, 10 mW
// caps, -95 dBm noise, E0/T = 0.12 mW, eta = 0.5, theta0 = 0.05, eps = 1e-4.
AppConfig default_app_config();

AppConfig parse_app_config(const std::string& json_text);
AppConfig load_app_config(const std::string& path);

std::string instance_to_json(const NetworkInstance& inst);
NetworkInstance instance_from_json(const std::string& json_text);
void save_instance(const NetworkInstance& inst, const std::string& path);
NetworkInstance load_instance(const std::string& path);

std::string solve_result_to_json(const SolveResult& result);
void save_solve_result(const SolveResult& result, const std::string& path);

} // namespace wprn
