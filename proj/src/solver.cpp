#include "wprn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wprn {

namespace {

// Harvested energy per unit alpha for a dedicator set.
double harvest_rate(const NetworkInstance& inst, const DedicatorSet& dedicators,
                    bool use_printed_k1) {
    const PhysicalParams& p = inst.params;
    double rate = 0.0;
    for (std::size_t i = 0; i < inst.num_pairs; ++i)
        if (dedicators[i])
            rate += p.conversion_efficiency * p.source_power_cap * p.block_time *
                    (use_printed_k1 ? 1.0 : inst.source_relay_gains[i]);
    return rate;
}

// A set can support positive relay utility iff the harvest at the largest
// QoS-respecting alpha covers the fixed cost (the data cost can be made
// arbitrarily small with the relay power).
bool set_can_be_feasible(const NetworkInstance& inst, const DedicatorSet& dedicators,
                         const SolverConfig& cfg) {
    const double alpha_hi = 1.0 - static_cast<double>(inst.num_pairs) *
                                      inst.params.min_pair_time_fraction;
    return harvest_rate(inst, dedicators, cfg.use_printed_k1) * alpha_hi * (1.0 - 1e-9) >
           inst.params.relay_fixed_cost();
}

// The alternation preserves each pair's beta/gamma ratio: the power step
// fits the powers to the current ratio and the time step reproduces it
// through the rate ratio. The starting split therefore fixes an invariant
// manifold, and solve_inner restarts from a few of them. The cap-balanced
// split equalizes the two hops at full powers.
std::vector<double> cap_balanced_uplink_shares(const NetworkInstance& inst) {
    std::vector<double> shares(inst.num_pairs);
    const PhysicalParams& p = inst.params;
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        const double up = std::log1p(p.source_power_cap * inst.source_relay_gains[i] / p.noise_power);
        const double down =
            std::log1p(p.relay_power_cap * inst.relay_destination_gains[i] / p.noise_power);
        const double ratio = down / up; // beta/gamma balancing the full-power hops
        shares[i] = ratio / (1.0 + ratio);
    }
    return shares;
}

Strategy assemble_strategy(const NetworkInstance& inst, const DedicatorSet& dedicators,
                           const TimeAllocation& times) {
    Strategy s = Strategy::zeros(inst.num_pairs);
    s.energy_power = apply_dedicators(inst, dedicators);
    for (std::size_t i = 0; i < inst.num_pairs; ++i)
        s.harvest_fraction[i] = dedicators[i] ? times.harvest_fraction : 0.0;
    s.uplink_fraction = times.uplink_fraction;
    s.downlink_fraction = times.downlink_fraction;
    return s;
}

TimeAllocation times_of(const Strategy& s) {
    TimeAllocation t;
    t.harvest_fraction = s.max_harvest_fraction();
    t.uplink_fraction = s.uplink_fraction;
    t.downlink_fraction = s.downlink_fraction;
    return t;
}

double relative_change(double now, double before) {
    return std::abs(now - before) / std::abs(before);
}

} // namespace

namespace {

InnerResult solve_inner_run(const NetworkInstance& inst, const DedicatorSet& dedicators,
                            const SolverConfig& cfg, const Strategy* warm_start) {
    InnerResult result;
    Strategy strategy;
    double phi1_prev = 0.0;
    double phi2_prev = 0.0;
    bool have_prev = false;
    if (warm_start != nullptr) {
        strategy = *warm_start;
        const auto phi0 = nash_product(inst, strategy);
        if (phi0.has_value()) {
            phi1_prev = phi2_prev = *phi0;
            have_prev = true;
        }
    } else {
        strategy = assemble_strategy(inst, dedicators,
                                     initial_time_allocation(inst, dedicators, cfg));
    }

    bool have_powers = warm_start != nullptr;
    for (std::size_t k = 1; k <= cfg.max_alternations; ++k) {
        // (a) data-transmission power update at fixed times
        const PowerCoefficients coeffs =
            power_coefficients(inst, dedicators, strategy, cfg.use_printed_k1);
        if (!coeffs.feasible) {
            if (k == 1)
                return result;
            break;
        }
        const auto relay_power = solve_relay_power(coeffs, cfg);
        if (!relay_power.has_value()) {
            if (k == 1)
                return result;
            break;
        }
        Strategy with_powers = strategy;
        with_powers.relay_power = *relay_power;
        with_powers.data_power = source_powers_from_relay(*relay_power, inst, strategy);
        const auto phi_new = nash_product(inst, with_powers);
        std::optional<double> phi_old;
        if (have_powers)
            phi_old = nash_product(inst, strategy);
        if (phi_new.has_value() && (!phi_old.has_value() || *phi_new >= *phi_old))
            strategy = std::move(with_powers);
        else if (!phi_old.has_value())
            break;
        have_powers = true;
        const auto phi1_opt = nash_product(inst, strategy);
        if (!phi1_opt.has_value())
            break;
        const double phi1 = *phi1_opt;

        // (b) time-division update at fixed powers
        const TimeCoefficients tc = time_coefficients(inst, dedicators, strategy);
        const TimeAllocation warm_times = times_of(strategy);
        const auto times = solve_time_division(tc, dedicators.count(), cfg, &warm_times);
        if (!times.has_value()) {
            if (k == 1)
                return result;
            break;
        }
        Strategy with_times = strategy;
        for (std::size_t i = 0; i < inst.num_pairs; ++i)
            with_times.harvest_fraction[i] = dedicators[i] ? times->harvest_fraction : 0.0;
        with_times.uplink_fraction = times->uplink_fraction;
        with_times.downlink_fraction = times->downlink_fraction;
        const auto phi2_opt = nash_product(inst, with_times);
        double phi2 = phi1;
        if (phi2_opt.has_value() && *phi2_opt >= phi1) {
            strategy = std::move(with_times);
            phi2 = *phi2_opt;
        }

        result.trace.push_back({k, phi1, phi2});
        result.alternations = k;
        if (have_prev &&
            std::max(relative_change(phi1, phi1_prev), relative_change(phi2, phi2_prev)) <
                cfg.epsilon) {
            result.converged = true;
            break;
        }
        phi1_prev = phi1;
        phi2_prev = phi2;
        have_prev = true;
    }

    result.strategy = strategy;
    result.phi = nash_product(inst, strategy);
    result.feasible = result.phi.has_value() && check_feasible(inst, strategy).feasible;
    return result;
}

SolveResult solve(const NetworkInstance& inst, const SolverConfig& cfg) {
    cfg.validate();
    inst.validate();

    SolveResult result;
    const auto sets = candidate_sets(inst, cfg.enumeration_mode);
    double best_log_phi = 0.0;
    for (const DedicatorSet& set : sets) {
        InnerResult inner = solve_inner(inst, set, cfg);
        result.total_alternations += inner.alternations;
        const bool feasible = inner.feasible && inner.phi.has_value();
        if (feasible) {
            const double log_phi = std::log(*inner.phi);
            if (!result.feasible || log_phi > best_log_phi) {
                best_log_phi = log_phi;
                result.best_phi = inner.phi;
                result.best_set = set;
                result.best_strategy = inner.strategy;
                result.feasible = true;
            }
        }
        result.per_set_results.push_back({set, std::move(inner)});
        if (cfg.enumeration_mode == EnumerationMode::pruned && !feasible)
            break; // smaller sets harvest strictly less
    }
    if (result.feasible)
        result.utilities = compute_utilities(inst, result.best_strategy);
    return result;
}

} // namespace wprn
