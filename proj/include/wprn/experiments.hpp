#pragma once

#include "wprn/network.hpp"
#include "wprn/oracle.hpp"
#include "wprn/solver.hpp"
#include "wprn/solver_config.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wprn {

// CSV experiment drivers. Every writer is a pure function of its arguments
// and formats numbers with 12 significant digits, so identical inputs give
// byte-identical files. Returns 0 on success, 2 when nothing feasible was
// produced.

// Convergence trace of the all-dedicator inner solve; two rows per
// alternation (power half-step, time half-step).
int run_trace(const NetworkInstance& inst, const SolverConfig& cfg, std::ostream& out);

// Per (seed, E0, K) solve of the top-K-by-gain dedicator set: objective, sum
// capacity and residual relay energy.
int run_dedicator_sweep(const ScenarioConfig& scenario, const SolverConfig& cfg,
                        const std::vector<std::uint64_t>& seeds, const std::vector<double>& e0_values,
                        std::ostream& out);

// Per-pair utilities of the best solution per seed, with per-role geometric
// mean summary rows.
int run_utility_distribution(const ScenarioConfig& scenario, const SolverConfig& cfg,
                             const std::vector<std::uint64_t>& seeds, std::ostream& out);

// Pass/fail rows per structural property per seed: hop balance at the
// solution, endpoint optimality in the energy power, unimodality along the
// relay-power and harvest axes, monotone convergence, the dedicator-ordering
// swap test and the pruned-vs-exhaustive gap (N <= 7).
int run_theorem_checks(const ScenarioConfig& scenario, const SolverConfig& cfg,
                       const std::vector<std::uint64_t>& seeds, std::ostream& out);

// Solver-vs-grid-oracle comparison (N <= 2) plus scan reports for the found
// solution.
int run_oracle_compare(const ScenarioConfig& scenario, const SolverConfig& cfg,
                       const std::vector<std::uint64_t>& seeds, std::size_t resolution,
                       std::ostream& out);

} // namespace wprn
