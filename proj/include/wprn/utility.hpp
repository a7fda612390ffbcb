#pragma once

#include "wprn/network.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wprn {

// Full variable vector of the bargaining problem: per-source energy-transfer
// power P_i^s1, data power P_i^s0, relay power P^r and the time fractions
// alpha_i, beta_i, gamma_i.
struct Strategy {
    std::vector<double> energy_power;      // P_i^s1, mW
    std::vector<double> data_power;        // P_i^s0, mW
    double relay_power = 0.0;              // P^r, mW
    std::vector<double> harvest_fraction;  // alpha_i
    std::vector<double> uplink_fraction;   // beta_i
    std::vector<double> downlink_fraction; // gamma_i

    static Strategy zeros(std::size_t num_pairs);
    std::size_t num_pairs() const { return energy_power.size(); }
    double max_harvest_fraction() const;
};

struct UtilityReport {
    std::vector<double> pair_capacities; // C_i, bits
    std::vector<double> pair_utilities;  // U_i^S, bits per mW*T
    double harvested_energy = 0.0;       // E, mW*T
    double relay_cost = 0.0;             // phi, mW*T
    double relay_utility = 0.0;          // U^R = E - phi
    std::optional<double> nash_product;  // Phi, absent when any factor <= 0
};

struct ConstraintViolation {
    std::string label;
    double residual = 0.0; // signed, lhs - bound
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<ConstraintViolation> violations;
};

// min of the two hop rates, in bits (base-2 logs).
double pair_capacity(const NetworkInstance& inst, const Strategy& s, std::size_t i);

// C_i / (P_i^s1 alpha_i + P_i^s0 beta_i); throws std::domain_error when the
// pair spends no source energy.
double pair_utility(const NetworkInstance& inst, const Strategy& s, std::size_t i);

double harvested_energy(const NetworkInstance& inst, const Strategy& s);
double relay_cost(const NetworkInstance& inst, const Strategy& s);
double relay_utility(const NetworkInstance& inst, const Strategy& s);

// Product of all pair utilities and the relay utility; nullopt when any
// factor is non-positive (the bargaining constraints require all > 0).
std::optional<double> nash_product(const NetworkInstance& inst, const Strategy& s);

// Uplink bits minus downlink bits for pair i; zero iff the relay forwards
// exactly what it receives.
double balance_gap(const NetworkInstance& inst, const Strategy& s, std::size_t i);

FeasibilityReport check_feasible(const NetworkInstance& inst, const Strategy& s);

UtilityReport compute_utilities(const NetworkInstance& inst, const Strategy& s);

} // namespace wprn
