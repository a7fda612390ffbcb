#pragma once

#include "wprn/dedicators.hpp"

#include <cstddef>
#include <stdexcept>

namespace wprn {

enum class PowerMode { golden_section, dual_ascent };
enum class TimeMode { substitution, dual_ascent };

struct SolverConfig {
    double epsilon = 1e-4;  // relative stopping tolerance on the alternation
    double epsilon1 = 1e-6; // relay-power tolerance, mW
    double epsilon2 = 1e-6; // time-division tolerance
    std::size_t max_inner_iterations = 10000; // per-subproblem iteration cap
    std::size_t max_alternations = 10000;     // cap on the alternation count
    EnumerationMode enumeration_mode = EnumerationMode::pruned;
    PowerMode power_mode = PowerMode::golden_section;
    TimeMode time_mode = TimeMode::substitution;
    double alpha_min = 1e-6;
    // Literal printed form of the harvested-energy constant (no channel gain
    // factor); kept for comparison against the energy-balance-consistent form.
    bool use_printed_k1 = false;
    bool debug_checks = false;

    void validate() const {
        if (!(epsilon > 0.0) || !(epsilon1 > 0.0) || !(epsilon2 > 0.0))
            throw std::invalid_argument("tolerances must be > 0");
        if (max_inner_iterations < 1 || max_alternations < 1)
            throw std::invalid_argument("iteration caps must be >= 1");
        if (!(alpha_min > 0.0))
            throw std::invalid_argument("alpha_min must be > 0");
    }
};

} // namespace wprn
