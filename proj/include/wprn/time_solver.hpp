#pragma once

#include "wprn/dedicators.hpp"
#include "wprn/network.hpp"
#include "wprn/solver_config.hpp"
#include "wprn/utility.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace wprn {

// Coefficients of the time-division subproblem at fixed powers. The
// objective over (alpha, {gamma_i}) is
//   prod_i d1[i] gamma_i / (d2[i] alpha + d3[i] gamma_i)
//   * (f1 alpha - f2 - sum_i d4[i] gamma_i)
// with beta_i recovered as d5[i] * gamma_i.
struct TimeCoefficients {
    std::vector<double> d1; // T ln(1 + P^r |g_i|^2 / sigma^2)
    std::vector<double> d2; // P_i^s1 T (zero for enjoyers)
    std::vector<double> d3; // P_i^s0 T d5[i]
    std::vector<double> d4; // P^r T
    std::vector<double> d5; // downlink rate / uplink rate
    double f1 = 0.0;        // eta sum_dedicators P0^s T |h_i|^2
    double f2 = 0.0;        // E0
    double min_pair_time_fraction = 0.0; // theta0, carried for the QoS bounds

    std::size_t num_pairs() const { return d1.size(); }
};

struct TimeAllocation {
    double harvest_fraction = 0.0;         // alpha
    std::vector<double> uplink_fraction;   // beta_i = d5[i] gamma_i
    std::vector<double> downlink_fraction; // gamma_i
};

// Computes the subproblem coefficients from the instance and the fixed
// powers carried by `powers` (P_i^s1, P_i^s0, P^r). Throws std::domain_error
// when any data power or the relay power is zero.
TimeCoefficients time_coefficients(const NetworkInstance& inst, const DedicatorSet& dedicators,
                                   const Strategy& powers);

// log of the subproblem objective (natural logs; -inf outside the domain).
double time_log_objective(const TimeCoefficients& c, double alpha,
                          const std::vector<double>& gamma);

// Partials of time_log_objective with alpha and the gamma_i treated as
// independent variables.
void time_log_gradient(const TimeCoefficients& c, double alpha, const std::vector<double>& gamma,
                       double& d_alpha, std::vector<double>& d_gamma);

// Maximizes the subproblem over the simplex-like set
//   gamma_i >= theta0 / (1 + d5[i]),  alpha = 1 - sum (1 + d5[i]) gamma_i,
//   alpha >= alpha_min,  relay margin f1 alpha - f2 - sum d4 gamma > 0.
// Default mode eliminates alpha and runs projected gradient ascent with
// Armijo backtracking; the dual-ascent mode follows the multiplier iteration
// with coupled, budget-preserving steps. Returns nullopt when no point of
// the set has positive relay margin. Throws std::domain_error when the QoS
// floors already exhaust the block time.
std::optional<TimeAllocation> solve_time_division(const TimeCoefficients& c,
                                                  std::size_t dedicator_count,
                                                  const SolverConfig& cfg,
                                                  const TimeAllocation* warm_start = nullptr);

// Strictly feasible starting allocation for a dedicator set: alpha sized so
// the harvested energy is about twice the fixed cost (clamped to the QoS
// budget), the remainder split equally across pairs.
TimeAllocation initial_time_allocation(const NetworkInstance& inst, const DedicatorSet& dedicators,
                                       const SolverConfig& cfg);

} // namespace wprn
