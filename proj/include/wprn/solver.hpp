#pragma once

#include "wprn/dedicators.hpp"
#include "wprn/network.hpp"
#include "wprn/power_solver.hpp"
#include "wprn/solver_config.hpp"
#include "wprn/time_solver.hpp"
#include "wprn/utility.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace wprn {

// One alternation of the inner loop: Phi after the power update and Phi
// after the time update (the half-step structure of the convergence plots).
struct TracePoint {
    std::size_t iteration = 0;
    double phi_power = 0.0;
    double phi_time = 0.0;
};

struct InnerResult {
    Strategy strategy;
    std::optional<double> phi;
    std::vector<TracePoint> trace;
    std::size_t alternations = 0;
    bool converged = false;
    bool feasible = false;
};

struct LabeledInnerResult {
    DedicatorSet set;
    InnerResult inner;
};

struct SolveResult {
    std::optional<double> best_phi;
    DedicatorSet best_set;
    Strategy best_strategy;
    UtilityReport utilities;
    std::vector<LabeledInnerResult> per_set_results;
    bool feasible = false;
    std::size_t total_alternations = 0;
};

// Alternates the relay-power and time-division subproblems for a fixed
// dedicator set until the relative change of both half-step objectives drops
// below cfg.epsilon or the alternation cap is hit. A warm start re-enters
// the loop from an existing strategy and treats its objective value as
// iterate zero.
InnerResult solve_inner(const NetworkInstance& inst, const DedicatorSet& dedicators,
                        const SolverConfig& cfg, const Strategy* warm_start = nullptr);

// Outer enumeration over candidate dedicator sets. In pruned mode the
// descent over K stops at the first infeasible size (smaller sets harvest
// strictly less); exhaustive mode evaluates every non-empty subset.
SolveResult solve(const NetworkInstance& inst, const SolverConfig& cfg);

} // namespace wprn
