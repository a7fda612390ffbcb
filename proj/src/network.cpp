#include "wprn/network.hpp"

#include "wprn/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace wprn {

void PhysicalParams::validate(std::size_t num_pairs) const {
    if (!(noise_power > 0.0))
        throw std::invalid_argument("noise_power must be > 0");
    if (!(conversion_efficiency > 0.0 && conversion_efficiency < 1.0))
        throw std::invalid_argument("conversion_efficiency must be in (0,1)");
    if (!(relay_fixed_cost_rate >= 0.0))
        throw std::invalid_argument("relay_fixed_cost_rate must be >= 0");
    if (!(source_power_cap > 0.0) || !(relay_power_cap > 0.0))
        throw std::invalid_argument("power caps must be > 0");
    if (!(block_time > 0.0))
        throw std::invalid_argument("block_time must be > 0");
    if (!(min_pair_time_fraction > 0.0))
        throw std::invalid_argument("min_pair_time_fraction must be > 0");
    if (!(static_cast<double>(num_pairs) * min_pair_time_fraction < 1.0))
        throw std::invalid_argument("N * min_pair_time_fraction must be < 1, no feasible time split");
}

void NetworkInstance::validate() const {
    if (num_pairs == 0)
        throw std::invalid_argument("instance needs at least one pair");
    if (source_relay_gains.size() != num_pairs || relay_destination_gains.size() != num_pairs)
        throw std::invalid_argument("gain sequences must have length N");
    for (double g : source_relay_gains)
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("source-relay gains must be strictly positive and finite");
    for (double g : relay_destination_gains)
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("relay-destination gains must be strictly positive and finite");
    params.validate(num_pairs);
}

void ScenarioConfig::validate() const {
    if (!(region_length > 0.0) || !(region_width > 0.0))
        throw std::invalid_argument("region dimensions must be positive");
    if (num_pairs == 0)
        throw std::invalid_argument("num_pairs must be >= 1");
    params.validate(num_pairs);
}

double dbm_to_mw(double level_dbm) {
    if (!std::isfinite(level_dbm))
        throw std::domain_error("dBm level must be finite");
    return std::pow(10.0, level_dbm / 10.0);
}

double mean_path_gain(double distance_m) {
    if (!(distance_m > 0.0))
        throw std::domain_error("distance must be > 0");
    return 1.0 / (distance_m * distance_m);
}

namespace {

double distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return std::sqrt(dx * dx + dy * dy);
}

// Nodes landing within 1e-6 m of the relay are re-drawn: the pure power-law
// gain would blow up there.
std::array<double, 2> draw_node(Rng& rng, double x0, double x1, double y0, double y1,
                                const std::array<double, 2>& relay) {
    for (;;) {
        std::array<double, 2> p{rng.uniform(x0, x1), rng.uniform(y0, y1)};
        if (distance(p, relay) > 1e-6)
            return p;
    }
}

} // namespace

NetworkInstance generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
    config.validate();

    NetworkInstance inst;
    inst.num_pairs = config.num_pairs;
    inst.params = config.params;
    inst.seed = seed;

    const double l = config.region_length;
    const double w = config.region_width;
    inst.relay_position = {0.5 * l, 0.5 * w};

    Rng rng(seed);
    inst.source_positions.reserve(config.num_pairs);
    for (std::size_t i = 0; i < config.num_pairs; ++i)
        inst.source_positions.push_back(draw_node(rng, 0.0, 0.5 * l, 0.0, 0.5 * w, inst.relay_position));
    inst.destination_positions.reserve(config.num_pairs);
    for (std::size_t i = 0; i < config.num_pairs; ++i)
        inst.destination_positions.push_back(draw_node(rng, 0.5 * l, l, 0.5 * w, w, inst.relay_position));

    inst.source_relay_gains.resize(config.num_pairs);
    inst.relay_destination_gains.resize(config.num_pairs);
    for (std::size_t i = 0; i < config.num_pairs; ++i) {
        double f = config.fading_model == FadingModel::rayleigh ? rng.exponential() : 1.0;
        inst.source_relay_gains[i] = mean_path_gain(distance(inst.source_positions[i], inst.relay_position)) * f;
    }
    for (std::size_t i = 0; i < config.num_pairs; ++i) {
        double f = config.fading_model == FadingModel::rayleigh ? rng.exponential() : 1.0;
        inst.relay_destination_gains[i] =
            mean_path_gain(distance(inst.destination_positions[i], inst.relay_position)) * f;
    }

    inst.validate();
    return inst;
}

std::string fading_model_name(FadingModel model) {
    return model == FadingModel::rayleigh ? "rayleigh" : "deterministic";
}

FadingModel fading_model_from_name(const std::string& name) {
    if (name == "rayleigh")
        return FadingModel::rayleigh;
    if (name == "deterministic")
        return FadingModel::deterministic;
    throw std::invalid_argument("unknown fading model: " + name);
}

} // namespace wprn
