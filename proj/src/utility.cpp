#include "wprn/utility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wprn {

namespace {

constexpr double kEqualityTol = 1e-9;

void require_pair(const NetworkInstance& inst, const Strategy& s, std::size_t i) {
    if (i >= inst.num_pairs || s.num_pairs() != inst.num_pairs)
        throw std::out_of_range("pair index out of range or strategy size mismatch");
}

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2_v<double>; }

} // namespace

Strategy Strategy::zeros(std::size_t num_pairs) {
    Strategy s;
    s.energy_power.assign(num_pairs, 0.0);
    s.data_power.assign(num_pairs, 0.0);
    s.harvest_fraction.assign(num_pairs, 0.0);
    s.uplink_fraction.assign(num_pairs, 0.0);
    s.downlink_fraction.assign(num_pairs, 0.0);
    return s;
}

double Strategy::max_harvest_fraction() const {
    double m = 0.0;
    for (double a : harvest_fraction)
        m = std::max(m, a);
    return m;
}

double pair_capacity(const NetworkInstance& inst, const Strategy& s, std::size_t i) {
    require_pair(inst, s, i);
    const double sigma2 = inst.params.noise_power;
    const double up = s.uplink_fraction[i] * log2_1p(s.data_power[i] * inst.source_relay_gains[i] / sigma2);
    const double down = s.downlink_fraction[i] * log2_1p(s.relay_power * inst.relay_destination_gains[i] / sigma2);
    return std::min(up, down);
}

double pair_utility(const NetworkInstance& inst, const Strategy& s, std::size_t i) {
    require_pair(inst, s, i);
    const double energy = s.energy_power[i] * s.harvest_fraction[i] + s.data_power[i] * s.uplink_fraction[i];
    if (!(energy > 0.0))
        throw std::domain_error("degenerate strategy: pair spends no source energy");
    return pair_capacity(inst, s, i) / energy;
}

double harvested_energy(const NetworkInstance& inst, const Strategy& s) {
    const double t = inst.params.block_time;
    double e = 0.0;
    for (std::size_t i = 0; i < inst.num_pairs; ++i)
        e += s.harvest_fraction[i] * t * s.energy_power[i] * inst.source_relay_gains[i];
    return inst.params.conversion_efficiency * e;
}

double relay_cost(const NetworkInstance& inst, const Strategy& s) {
    const double t = inst.params.block_time;
    double gamma_sum = 0.0;
    for (double g : s.downlink_fraction)
        gamma_sum += g;
    return gamma_sum * t * s.relay_power + inst.params.relay_fixed_cost();
}

double relay_utility(const NetworkInstance& inst, const Strategy& s) {
    return harvested_energy(inst, s) - relay_cost(inst, s);
}

std::optional<double> nash_product(const NetworkInstance& inst, const Strategy& s) {
    const double ur = relay_utility(inst, s);
    if (!(ur > 0.0))
        return std::nullopt;
    double product = ur;
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        const double u = pair_utility(inst, s, i);
        if (!(u > 0.0))
            return std::nullopt;
        product *= u;
    }
    return product;
}

double balance_gap(const NetworkInstance& inst, const Strategy& s, std::size_t i) {
    require_pair(inst, s, i);
    const double sigma2 = inst.params.noise_power;
    const double up = s.uplink_fraction[i] * log2_1p(s.data_power[i] * inst.source_relay_gains[i] / sigma2);
    const double down = s.downlink_fraction[i] * log2_1p(s.relay_power * inst.relay_destination_gains[i] / sigma2);
    return up - down;
}

FeasibilityReport check_feasible(const NetworkInstance& inst, const Strategy& s) {
    FeasibilityReport report;
    auto add = [&report](std::string label, double residual) {
        report.violations.push_back({std::move(label), residual});
    };
    if (s.num_pairs() != inst.num_pairs) {
        add("size_mismatch", static_cast<double>(s.num_pairs()) - static_cast<double>(inst.num_pairs));
        report.feasible = false;
        return report;
    }

    const PhysicalParams& p = inst.params;
    double time_sum = s.max_harvest_fraction();
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        const std::string idx = "(" + std::to_string(i) + ")";
        if (s.energy_power[i] < 0.0)
            add("energy_power_negative" + idx, s.energy_power[i]);
        if (s.data_power[i] < 0.0)
            add("data_power_negative" + idx, s.data_power[i]);
        if (s.harvest_fraction[i] < 0.0)
            add("harvest_fraction_negative" + idx, s.harvest_fraction[i]);
        if (s.uplink_fraction[i] < 0.0)
            add("uplink_fraction_negative" + idx, s.uplink_fraction[i]);
        if (s.downlink_fraction[i] < 0.0)
            add("downlink_fraction_negative" + idx, s.downlink_fraction[i]);
        if (s.energy_power[i] > p.source_power_cap * (1.0 + kEqualityTol))
            add("source_energy_power_cap" + idx, s.energy_power[i] - p.source_power_cap);
        if (s.data_power[i] > p.source_power_cap * (1.0 + kEqualityTol))
            add("source_data_power_cap" + idx, s.data_power[i] - p.source_power_cap);
        const double qos = s.uplink_fraction[i] + s.downlink_fraction[i] - p.min_pair_time_fraction;
        if (qos < -kEqualityTol)
            add("qos" + idx, qos);
        time_sum += s.uplink_fraction[i] + s.downlink_fraction[i];
    }
    if (s.relay_power < 0.0)
        add("relay_power_negative", s.relay_power);
    if (s.relay_power > p.relay_power_cap * (1.0 + kEqualityTol))
        add("relay_power_cap", s.relay_power - p.relay_power_cap);
    if (std::abs(time_sum - 1.0) > kEqualityTol)
        add("time_budget", time_sum - 1.0);

    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        const std::string idx = "(" + std::to_string(i) + ")";
        const double energy = s.energy_power[i] * s.harvest_fraction[i] + s.data_power[i] * s.uplink_fraction[i];
        if (!(energy > 0.0)) {
            add("degenerate_pair" + idx, energy);
            continue;
        }
        const double u = pair_capacity(inst, s, i) / energy;
        if (!(u > 0.0))
            add("pair_utility" + idx, u);
    }
    const double ur = relay_utility(inst, s);
    if (!(ur > 0.0))
        add("relay_utility", ur);

    report.feasible = report.violations.empty();
    return report;
}

UtilityReport compute_utilities(const NetworkInstance& inst, const Strategy& s) {
    UtilityReport r;
    r.pair_capacities.resize(inst.num_pairs);
    r.pair_utilities.resize(inst.num_pairs);
    bool positive = true;
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        r.pair_capacities[i] = pair_capacity(inst, s, i);
        r.pair_utilities[i] = pair_utility(inst, s, i);
        positive = positive && r.pair_utilities[i] > 0.0;
    }
    r.harvested_energy = harvested_energy(inst, s);
    r.relay_cost = relay_cost(inst, s);
    r.relay_utility = r.harvested_energy - r.relay_cost;
    if (positive && r.relay_utility > 0.0) {
        double product = r.relay_utility;
        for (double u : r.pair_utilities)
            product *= u;
        r.nash_product = product;
    }
    return r;
}

} // namespace wprn
