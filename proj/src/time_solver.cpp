#include "wprn/time_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wprn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double margin(const TimeCoefficients& c, double alpha, const std::vector<double>& gamma) {
    double m = c.f1 * alpha - c.f2;
    for (std::size_t i = 0; i < c.num_pairs(); ++i)
        m -= c.d4[i] * gamma[i];
    return m;
}

struct FeasibleSet {
    std::vector<double> lb;      // per-pair gamma floor, theta0 / (1 + d5)
    std::vector<double> weight;  // 1 + d5
    double budget = 0.0;         // max of sum weight*gamma, i.e. 1 - alpha_min

    double alpha_of(const std::vector<double>& gamma) const {
        double used = 0.0;
        for (std::size_t i = 0; i < gamma.size(); ++i)
            used += weight[i] * gamma[i];
        return 1.0 - used;
    }

    // Euclidean projection onto {gamma >= lb, sum weight*gamma <= budget}.
    std::vector<double> project(std::vector<double> gamma) const {
        for (std::size_t i = 0; i < gamma.size(); ++i)
            gamma[i] = std::max(gamma[i], lb[i]);
        auto used = [this](const std::vector<double>& g) {
            double s = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i)
                s += weight[i] * g[i];
            return s;
        };
        if (used(gamma) <= budget)
            return gamma;
        double lam_lo = 0.0;
        double lam_hi = 1.0;
        auto shifted = [&](double lam) {
            std::vector<double> g(gamma.size());
            for (std::size_t i = 0; i < g.size(); ++i)
                g[i] = std::max(lb[i], gamma[i] - lam * weight[i]);
            return g;
        };
        while (used(shifted(lam_hi)) > budget)
            lam_hi *= 2.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lam_lo + lam_hi);
            if (used(shifted(mid)) > budget)
                lam_lo = mid;
            else
                lam_hi = mid;
        }
        return shifted(lam_hi);
    }
};

FeasibleSet make_feasible_set(const TimeCoefficients& c, const SolverConfig& cfg) {
    FeasibleSet set;
    const std::size_t n = c.num_pairs();
    set.lb.resize(n);
    set.weight.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        set.weight[i] = 1.0 + c.d5[i];
        set.lb[i] = c.min_pair_time_fraction / set.weight[i];
    }
    set.budget = 1.0 - cfg.alpha_min;
    const double floor_usage = static_cast<double>(n) * c.min_pair_time_fraction;
    if (floor_usage >= set.budget)
        throw std::domain_error("QoS floors leave no room for energy harvesting");
    return set;
}

TimeAllocation pack_allocation(const TimeCoefficients& c, const FeasibleSet& set,
                               const std::vector<double>& gamma) {
    TimeAllocation out;
    out.harvest_fraction = set.alpha_of(gamma);
    out.downlink_fraction = gamma;
    out.uplink_fraction.resize(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i)
        out.uplink_fraction[i] = c.d5[i] * gamma[i];
    return out;
}

std::optional<TimeAllocation> solve_time_substitution(const TimeCoefficients& c,
                                                      const SolverConfig& cfg,
                                                      const FeasibleSet& set,
                                                      std::vector<double> gamma) {
    const std::size_t n = c.num_pairs();
    auto objective = [&](const std::vector<double>& g) {
        return time_log_objective(c, set.alpha_of(g), g);
    };
    auto gradient = [&](const std::vector<double>& g, std::vector<double>& out) {
        double d_alpha = 0.0;
        time_log_gradient(c, set.alpha_of(g), g, d_alpha, out);
        for (std::size_t i = 0; i < n; ++i)
            out[i] -= set.weight[i] * d_alpha;
    };

    double value = objective(gamma);
    std::vector<double> grad(n);
    gradient(gamma, grad);
    double step = 1e-3;
    for (std::size_t iter = 0; iter < cfg.max_inner_iterations; ++iter) {
        std::vector<double> trial(n);
        double trial_value = kNegInf;
        bool accepted = false;
        double t = step;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t i = 0; i < n; ++i)
                trial[i] = gamma[i] + t * grad[i];
            trial = set.project(std::move(trial));
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                dot += grad[i] * (trial[i] - gamma[i]);
            trial_value = objective(trial);
            if (std::isfinite(trial_value) && trial_value >= value + 1e-4 * dot && dot > 0.0) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted)
            break; // numerically stationary

        const double alpha_prev = set.alpha_of(gamma);
        double move = 0.0;
        std::vector<double> grad_new(n);
        gradient(trial, grad_new);
        // Barzilai-Borwein step for the next iterate, Armijo-safeguarded above.
        double ss = 0.0, sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s = trial[i] - gamma[i];
            const double y = grad[i] - grad_new[i];
            ss += s * s;
            sy += s * y;
            move = std::max(move, std::abs(s));
        }
        step = sy > 0.0 ? std::clamp(ss / sy, 1e-12, 1e6) : std::min(1.0, t * 2.0);
        gamma = trial;
        value = trial_value;
        grad = grad_new;
        if (std::max(move, std::abs(set.alpha_of(gamma) - alpha_prev)) <= cfg.epsilon2)
            break;
    }
    return pack_allocation(c, set, gamma);
}

std::optional<TimeAllocation> solve_time_dual(const TimeCoefficients& c, const SolverConfig& cfg,
                                              const FeasibleSet& set, std::vector<double> gamma) {
    const std::size_t n = c.num_pairs();
    std::vector<double> qos_mult(n, 0.0);
    double budget_mult = 0.0;
    double alpha = set.alpha_of(gamma);

    std::vector<double> d_gamma(n);
    for (std::size_t t = 1; t <= cfg.max_inner_iterations; ++t) {
        const double alpha_prev = alpha;
        // Coupled primal steps: gamma moves along the Lagrangian gradient
        // with diminishing step, alpha absorbs the move so the block-time
        // budget holds exactly; the step shrinks until the QoS floors and the
        // relay-margin domain stay satisfied.
        for (std::size_t inner = 1; inner <= 50; ++inner) {
            double d_alpha = 0.0;
            time_log_gradient(c, alpha, gamma, d_alpha, d_gamma);
            for (std::size_t i = 0; i < n; ++i)
                d_gamma[i] += -budget_mult * set.weight[i] + qos_mult[i] * set.weight[i];
            double kappa = 0.01 / std::sqrt(static_cast<double>(inner));
            bool ok = false;
            std::vector<double> trial(n);
            double trial_alpha = alpha;
            for (int shrink = 0; shrink < 60 && !ok; ++shrink) {
                double delta_alpha = 0.0;
                ok = true;
                for (std::size_t i = 0; i < n; ++i) {
                    trial[i] = gamma[i] + kappa * d_gamma[i];
                    if (trial[i] < set.lb[i]) {
                        ok = false;
                        break;
                    }
                    delta_alpha -= set.weight[i] * (trial[i] - gamma[i]);
                }
                if (ok) {
                    trial_alpha = alpha + delta_alpha;
                    ok = trial_alpha >= cfg.alpha_min && margin(c, trial_alpha, trial) > 0.0;
                }
                if (!ok)
                    kappa *= 0.5;
            }
            if (!ok)
                break;
            double move = std::abs(trial_alpha - alpha);
            for (std::size_t i = 0; i < n; ++i)
                move = std::max(move, std::abs(trial[i] - gamma[i]));
            gamma = trial;
            alpha = trial_alpha;
            if (move <= 0.1 * cfg.epsilon2)
                break;
        }
        // Multiplier updates; the budget residual is zero by construction and
        // the QoS multipliers project onto the non-negative orthant.
        const double tau = 0.01 / std::sqrt(static_cast<double>(t));
        double budget_residual = alpha - 1.0;
        for (std::size_t i = 0; i < n; ++i)
            budget_residual += set.weight[i] * gamma[i];
        budget_mult += tau * budget_residual;
        for (std::size_t i = 0; i < n; ++i) {
            const double residual = c.min_pair_time_fraction - set.weight[i] * gamma[i];
            qos_mult[i] = std::max(0.0, qos_mult[i] + tau * residual);
        }
        if (t > 1 && std::abs(alpha - alpha_prev) < cfg.epsilon2)
            break;
    }
    return pack_allocation(c, set, gamma);
}

} // namespace

TimeCoefficients time_coefficients(const NetworkInstance& inst, const DedicatorSet& dedicators,
                                   const Strategy& powers) {
    if (dedicators.size() != inst.num_pairs || powers.num_pairs() != inst.num_pairs)
        throw std::invalid_argument("size mismatch in time_coefficients");
    if (!(powers.relay_power > 0.0))
        throw std::domain_error("degenerate power: relay power must be > 0");

    const PhysicalParams& p = inst.params;
    const double t = p.block_time;
    const double sigma2 = p.noise_power;

    TimeCoefficients c;
    c.d1.resize(inst.num_pairs);
    c.d2.resize(inst.num_pairs);
    c.d3.resize(inst.num_pairs);
    c.d4.resize(inst.num_pairs);
    c.d5.resize(inst.num_pairs);
    c.f2 = p.relay_fixed_cost();
    c.min_pair_time_fraction = p.min_pair_time_fraction;

    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        if (!(powers.data_power[i] > 0.0))
            throw std::domain_error("degenerate power: data power must be > 0");
        const double down = std::log1p(powers.relay_power * inst.relay_destination_gains[i] / sigma2);
        const double up = std::log1p(powers.data_power[i] * inst.source_relay_gains[i] / sigma2);
        c.d1[i] = t * down;
        c.d2[i] = powers.energy_power[i] * t;
        c.d5[i] = down / up;
        c.d3[i] = powers.data_power[i] * t * c.d5[i];
        c.d4[i] = powers.relay_power * t;
        if (dedicators[i])
            c.f1 += p.conversion_efficiency * p.source_power_cap * t * inst.source_relay_gains[i];
    }
    return c;
}

double time_log_objective(const TimeCoefficients& c, double alpha,
                          const std::vector<double>& gamma) {
    const double m = margin(c, alpha, gamma);
    if (!(m > 0.0) || !(alpha > 0.0))
        return kNegInf;
    double value = std::log(m);
    for (std::size_t i = 0; i < c.num_pairs(); ++i) {
        if (!(gamma[i] > 0.0))
            return kNegInf;
        const double den = c.d2[i] * alpha + c.d3[i] * gamma[i];
        value += std::log(c.d1[i] * gamma[i]) - std::log(den);
    }
    return value;
}

void time_log_gradient(const TimeCoefficients& c, double alpha, const std::vector<double>& gamma,
                       double& d_alpha, std::vector<double>& d_gamma) {
    const double m = margin(c, alpha, gamma);
    d_gamma.resize(c.num_pairs());
    d_alpha = c.f1 / m;
    for (std::size_t i = 0; i < c.num_pairs(); ++i) {
        const double den = c.d2[i] * alpha + c.d3[i] * gamma[i];
        d_alpha -= c.d2[i] / den;
        d_gamma[i] = 1.0 / gamma[i] - c.d3[i] / den - c.d4[i] / m;
    }
}

std::optional<TimeAllocation> solve_time_division(const TimeCoefficients& c,
                                                  std::size_t dedicator_count,
                                                  const SolverConfig& cfg,
                                                  const TimeAllocation* warm_start) {
    if (dedicator_count == 0 || !(c.f1 > 0.0))
        return std::nullopt;
    const FeasibleSet set = make_feasible_set(c, cfg);

    // The relay margin is affine and decreasing in every gamma_i, so its
    // maximum over the set sits at the QoS floors; a non-positive value there
    // means the whole subproblem is infeasible.
    if (!(margin(c, set.alpha_of(set.lb), set.lb) > 0.0))
        return std::nullopt;

    std::vector<double> start = warm_start != nullptr ? set.project(warm_start->downlink_fraction)
                                                      : set.lb;
    if (!std::isfinite(time_log_objective(c, set.alpha_of(start), start)))
        start = set.lb;

    if (cfg.time_mode == TimeMode::dual_ascent)
        return solve_time_dual(c, cfg, set, std::move(start));
    return solve_time_substitution(c, cfg, set, std::move(start));
}

TimeAllocation initial_time_allocation(const NetworkInstance& inst, const DedicatorSet& dedicators,
                                       const SolverConfig& cfg) {
    const PhysicalParams& p = inst.params;
    const std::size_t n = inst.num_pairs;
    double harvest_rate = 0.0; // dE/dalpha, mW*T per unit alpha
    for (std::size_t i = 0; i < n; ++i)
        if (dedicators[i])
            harvest_rate += p.conversion_efficiency * p.source_power_cap * p.block_time *
                            inst.source_relay_gains[i];

    const double alpha_hi = 1.0 - static_cast<double>(n) * p.min_pair_time_fraction;
    const double e0 = p.relay_fixed_cost();
    double alpha = e0 > 0.0 && harvest_rate > 0.0 ? 2.0 * e0 / harvest_rate : 0.25 * alpha_hi;
    alpha = std::clamp(alpha, cfg.alpha_min, alpha_hi * (1.0 - 1e-9));

    TimeAllocation out;
    out.harvest_fraction = alpha;
    out.uplink_fraction.assign(n, (1.0 - alpha) / (2.0 * static_cast<double>(n)));
    out.downlink_fraction.assign(n, (1.0 - alpha) / (2.0 * static_cast<double>(n)));
    return out;
}

} // namespace wprn
