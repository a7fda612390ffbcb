#pragma once

#include "wprn/dedicators.hpp"
#include "wprn/network.hpp"
#include "wprn/solver_config.hpp"
#include "wprn/utility.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace wprn {

// Coefficients of the scalar relay-power subproblem. With the hop-balance
// substitution the objective over P^r in [0, upper_bound] is
//   prod_i log(1 + l1[i] P) / (l3[i]((1 + l1[i] P)^l2[i] - 1) + l4[i])
//   * (k1 - k2 P).
struct PowerCoefficients {
    std::vector<double> l1; // |g_i|^2 / sigma^2, 1/mW
    std::vector<double> l2; // gamma_i / beta_i
    std::vector<double> l3; // beta_i T sigma^2 / |h_i|^2
    std::vector<double> l4; // alpha_i T P_i^s1
    double k1 = 0.0;        // harvested energy minus fixed cost, mW*T
    double k2 = 0.0;        // sum gamma_i T
    double upper_bound = 0.0;
    bool feasible = false;

    std::size_t num_pairs() const { return l1.size(); }
};

// Builds the Eq.-style coefficients from the instance, the dedicator
// assignment and the time fractions carried by `times` (alpha_i, beta_i,
// gamma_i; power entries are ignored except P_i^s1). Throws
// std::domain_error when any beta_i or gamma_i is zero. A non-feasible
// result (k1 <= 0 or empty box) carries feasible = false.
PowerCoefficients power_coefficients(const NetworkInstance& inst, const DedicatorSet& dedicators,
                                     const Strategy& times, bool use_printed_k1 = false);

// log of the subproblem objective (natural logs; -inf outside the domain).
double power_log_objective(const PowerCoefficients& c, double relay_power);

// d/dP of power_log_objective.
double power_log_gradient(const PowerCoefficients& c, double relay_power);

// Maximizer of the subproblem objective over [0, upper_bound]. Golden-section
// search by default (valid under unimodality); the dual-ascent mode follows
// the multiplier iteration with diminishing steps. Returns nullopt for
// infeasible coefficients.
std::optional<double> solve_relay_power(const PowerCoefficients& c, const SolverConfig& cfg);

// Inverts the hop balance: P_i^s0 such that each pair's uplink bits equal its
// downlink bits at the given relay power and time fractions. Throws when a
// recovered power exceeds the source cap by more than 1e-9 relative (the
// caller's box should prevent that).
std::vector<double> source_powers_from_relay(double relay_power, const NetworkInstance& inst,
                                             const Strategy& times);

// Golden-section maximization of a unimodal function on [lo, hi]; the
// returned point is within tol_x of the maximizer.
template <typename F>
double golden_section_max(F&& f, double lo, double hi, double tol_x, std::size_t max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (std::size_t it = 0; it < max_iter && (b - a) > tol_x; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace wprn
