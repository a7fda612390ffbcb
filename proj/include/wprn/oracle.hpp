#pragma once

#include "wprn/dedicators.hpp"
#include "wprn/network.hpp"
#include "wprn/rng.hpp"
#include "wprn/utility.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wprn {

enum class ScanAxis { relay_power, harvest_fraction };

struct ScanReport {
    std::string axis;
    std::size_t grid = 0;
    std::size_t argmax_index = 0; // == grid when every sample is infeasible
    std::size_t local_maxima_count = 0;
    bool is_unimodal = false;
    bool is_endpoint_argmax = false;
};

struct OracleResult {
    std::optional<double> best_phi;
    Strategy best_point;
    std::vector<std::size_t> grid_resolution;
    std::size_t evaluations = 0;
    std::size_t feasible_points = 0;
};

// Exhaustive evaluation of the objective for N <= 2 on nested right-closed
// grids (x_j = j X / R, j = 1..R): axes are (alpha, gamma_1[, gamma_2],
// relay power) with the hop balance enforced, source powers recovered from
// the relay power and the uplink fractions taking the budget remainder.
// Throws std::invalid_argument for N > 2.
OracleResult grid_oracle(const NetworkInstance& inst, const DedicatorSet& dedicators,
                         std::size_t resolution);

// Samples the objective along one axis with everything else fixed and counts
// local maxima under a 1e-12 relative plateau tolerance. The harvest-fraction
// axis keeps the block-time budget by rescaling every beta_i and gamma_i
// proportionally.
ScanReport unimodality_scan(const NetworkInstance& inst, const Strategy& strategy, ScanAxis axis,
                            std::size_t grid);

// Samples the objective over P_i^s1 in [0, P0^s] and reports whether the
// argmax sits at (within one step of) an endpoint.
ScanReport endpoint_scan_energy_power(const NetworkInstance& inst, const Strategy& strategy,
                                      std::size_t i, std::size_t grid);

// Draws a feasible (not necessarily hop-balanced) strategy with a random
// dedicator subset; used by the scan-based theorem checks. Throws
// std::runtime_error when no feasible draw is found in a bounded number of
// attempts (the fixed cost is too large for the instance).
Strategy random_feasible_strategy(const NetworkInstance& inst, Rng& rng);

} // namespace wprn
