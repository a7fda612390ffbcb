#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wprn {

// Physical constants of a scenario. All powers are in mW, all times are
// fractions of the block time T (normalized to 1), energies in mW*T.
struct PhysicalParams {
    double noise_power = 0.0;            // sigma^2, mW
    double conversion_efficiency = 0.0;  // eta, in (0,1)
    double relay_fixed_cost_rate = 0.0;  // E0/T, mW
    double min_pair_time_fraction = 0.0; // theta0
    double source_power_cap = 0.0;       // P0^s, mW
    double relay_power_cap = 0.0;        // P0^r, mW
    double block_time = 1.0;             // T

    // E0 = (E0/T) * T.
    double relay_fixed_cost() const { return relay_fixed_cost_rate * block_time; }

    void validate(std::size_t num_pairs) const;
};

// One realized network: geometry, channel power gains and constants.
struct NetworkInstance {
    std::size_t num_pairs = 0;
    std::vector<std::array<double, 2>> source_positions;
    std::vector<std::array<double, 2>> destination_positions;
    std::array<double, 2> relay_position{0.0, 0.0};
    std::vector<double> source_relay_gains;      // |h_i|^2
    std::vector<double> relay_destination_gains; // |g_i|^2
    PhysicalParams params;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class FadingModel { rayleigh, deterministic };

struct ScenarioConfig {
    double region_length = 20.0; // L, m
    double region_width = 20.0;  // W, m
    std::size_t num_pairs = 7;
    FadingModel fading_model = FadingModel::rayleigh;
    PhysicalParams params;

    void validate() const;
};

// 10^(level/10); the core works in mW only, conversion happens at config load.
double dbm_to_mw(double level_dbm);

// distance^-2 average path gain; throws std::domain_error for distance <= 0.
double mean_path_gain(double distance_m);

// Sources uniform in [0,L/2]x[0,W/2], destinations in [L/2,L]x[W/2,W], relay
// at (L/2,W/2). Channel power gain = mean_path_gain(distance) * F with F a
// unit-mean exponential draw under Rayleigh fading, F = 1 when deterministic.
// Pure function of (config, seed).
NetworkInstance generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

std::string fading_model_name(FadingModel model);
FadingModel fading_model_from_name(const std::string& name);

} // namespace wprn
