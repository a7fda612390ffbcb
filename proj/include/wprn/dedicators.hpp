#pragma once

#include "wprn/network.hpp"
#include "wprn/utility.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wprn {

enum class EnumerationMode { pruned, exhaustive };

// Indicator vector over sources: true marks an energy dedicator.
struct DedicatorSet {
    std::vector<bool> indicator;

    std::size_t count() const;
    std::size_t size() const { return indicator.size(); }
    bool operator[](std::size_t i) const { return indicator[i]; }
    std::vector<std::size_t> members() const;
};

// P_i^s1 = P0^s for dedicators, 0 for enjoyers.
std::vector<double> apply_dedicators(const NetworkInstance& inst, const DedicatorSet& set);

// Source indices sorted by |h_i|^2 descending, ties broken by ascending index.
std::vector<std::size_t> sources_by_gain(const NetworkInstance& inst);

// Pruned mode: one set per K from N down to 1, each holding the top-K sources
// by |h_i|^2. Exhaustive mode: all non-empty subsets (N <= 10), larger sets
// first. The empty set is never emitted; it cannot have positive relay
// utility.
std::vector<DedicatorSet> candidate_sets(const NetworkInstance& inst,
                                         EnumerationMode mode = EnumerationMode::pruned);

// Evaluates the bargaining objective twice on `shared`: once with source i as
// the sole swapped-in dedicator (and j an enjoyer), once with the roles
// exchanged, all other entries untouched. Returns true iff Phi_i >= Phi_j.
// Callers must arrange beta_i*P_i^s0 >= beta_j*P_j^s0, |h_i|^2 >= |h_j|^2 and
// both configurations feasible.
bool dedicator_ordering_check(const NetworkInstance& inst, std::size_t i, std::size_t j,
                              const Strategy& shared);

} // namespace wprn
