#include "wprn/power_solver.hpp"

#include "wprn/scan_utils.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wprn {

namespace {

constexpr double kPoleClip = 1.0 - 1e-9;

} // namespace

PowerCoefficients power_coefficients(const NetworkInstance& inst, const DedicatorSet& dedicators,
                                     const Strategy& times, bool use_printed_k1) {
    if (dedicators.size() != inst.num_pairs || times.num_pairs() != inst.num_pairs)
        throw std::invalid_argument("size mismatch in power_coefficients");

    const PhysicalParams& p = inst.params;
    const double t = p.block_time;
    const double sigma2 = p.noise_power;

    PowerCoefficients c;
    c.l1.resize(inst.num_pairs);
    c.l2.resize(inst.num_pairs);
    c.l3.resize(inst.num_pairs);
    c.l4.resize(inst.num_pairs);

    double cap_box = p.relay_power_cap;
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        const double beta = times.uplink_fraction[i];
        const double gamma = times.downlink_fraction[i];
        if (!(beta > 0.0) || !(gamma > 0.0))
            throw std::domain_error("degenerate time division: beta_i and gamma_i must be > 0");
        c.l1[i] = inst.relay_destination_gains[i] / sigma2;
        c.l2[i] = gamma / beta;
        c.l3[i] = beta * t * sigma2 / inst.source_relay_gains[i];
        c.l4[i] = times.harvest_fraction[i] * t * (dedicators[i] ? p.source_power_cap : 0.0);
        // Relay power beyond which the recovered source power would exceed
        // the cap (the per-pair bound folded into the box).
        const double snr_cap = p.source_power_cap * inst.source_relay_gains[i] / sigma2;
        const double pair_cap = (sigma2 / inst.relay_destination_gains[i]) *
                                std::expm1((beta / gamma) * std::log1p(snr_cap));
        cap_box = std::min(cap_box, pair_cap);
    }

    double k1 = -p.relay_fixed_cost();
    double k2 = 0.0;
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        if (dedicators[i]) {
            const double gain = use_printed_k1 ? 1.0 : inst.source_relay_gains[i];
            k1 += p.conversion_efficiency * times.harvest_fraction[i] * p.source_power_cap * t * gain;
        }
        k2 += times.downlink_fraction[i] * t;
    }
    c.k1 = k1;
    c.k2 = k2;
    c.upper_bound = std::min(cap_box, kPoleClip * k1 / k2);
    c.feasible = k1 > 0.0 && c.upper_bound > 0.0;
    return c;
}

double power_log_objective(const PowerCoefficients& c, double relay_power) {
    if (!(relay_power > 0.0))
        return kInfeasiblePhi;
    const double margin = c.k1 - c.k2 * relay_power;
    if (!(margin > 0.0))
        return kInfeasiblePhi;
    double value = std::log(margin);
    for (std::size_t i = 0; i < c.num_pairs(); ++i) {
        const double u = std::log1p(c.l1[i] * relay_power);
        const double den = c.l3[i] * std::expm1(c.l2[i] * u) + c.l4[i];
        if (!(den > 0.0) || !std::isfinite(den))
            return kInfeasiblePhi;
        value += std::log(u) - std::log(den);
    }
    return value;
}

double power_log_gradient(const PowerCoefficients& c, double relay_power) {
    const double margin = c.k1 - c.k2 * relay_power;
    double grad = -c.k2 / margin;
    for (std::size_t i = 0; i < c.num_pairs(); ++i) {
        const double one_plus = 1.0 + c.l1[i] * relay_power;
        const double u = std::log1p(c.l1[i] * relay_power);
        const double den = c.l3[i] * std::expm1(c.l2[i] * u) + c.l4[i];
        grad += c.l1[i] / (one_plus * u);
        grad -= c.l3[i] * c.l2[i] * c.l1[i] * std::exp((c.l2[i] - 1.0) * u) / den;
    }
    return grad;
}

namespace {

void debug_unimodality_check(const PowerCoefficients& c) {
    std::vector<double> samples(1000);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double pr = c.upper_bound * static_cast<double>(k + 1) / static_cast<double>(samples.size());
        samples[k] = power_log_objective(c, pr);
    }
    if (count_local_maxima(samples, 1e-12) > 1)
        throw std::runtime_error("relay-power objective scan is not unimodal");
}

double solve_relay_power_dual(const PowerCoefficients& c, const SolverConfig& cfg) {
    // Multiplier iteration on the log-domain Lagrangian; the inner step is a
    // golden-section pass over the objective's natural domain.
    const double domain_hi = std::min(kPoleClip * c.k1 / c.k2, 1e6 * c.upper_bound);
    double rho_lo = 0.0;
    double rho_hi = 0.0;
    double pr_prev = std::numeric_limits<double>::quiet_NaN();
    double pr = 0.0;
    const double step0 = 0.1 * c.upper_bound;
    for (std::size_t t = 1; t <= cfg.max_inner_iterations; ++t) {
        const double shift = rho_lo - rho_hi;
        auto lagrangian = [&](double x) { return power_log_objective(c, x) + shift * x; };
        pr = golden_section_max(lagrangian, 0.0, domain_hi, cfg.epsilon1);
        const double step = step0 / std::sqrt(static_cast<double>(t));
        rho_lo = std::max(0.0, rho_lo + step * (0.0 - pr));
        rho_hi = std::max(0.0, rho_hi + step * (pr - c.upper_bound));
        const bool inside = pr <= c.upper_bound + cfg.epsilon1;
        if (!std::isnan(pr_prev) && std::abs(pr - pr_prev) < cfg.epsilon1 && inside)
            break;
        pr_prev = pr;
    }
    return std::clamp(pr, 0.0, c.upper_bound);
}

} // namespace

std::optional<double> solve_relay_power(const PowerCoefficients& c, const SolverConfig& cfg) {
    if (!c.feasible)
        return std::nullopt;
    if (cfg.debug_checks)
        debug_unimodality_check(c);
    if (cfg.power_mode == PowerMode::dual_ascent)
        return solve_relay_power_dual(c, cfg);
    auto objective = [&c](double x) { return power_log_objective(c, x); };
    return golden_section_max(objective, 0.0, c.upper_bound, cfg.epsilon1);
}

std::vector<double> source_powers_from_relay(double relay_power, const NetworkInstance& inst,
                                             const Strategy& times) {
    const double sigma2 = inst.params.noise_power;
    std::vector<double> powers(inst.num_pairs, 0.0);
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        const double beta = times.uplink_fraction[i];
        const double gamma = times.downlink_fraction[i];
        if (!(beta > 0.0))
            throw std::domain_error("beta_i must be > 0 to invert the hop balance");
        const double down = std::log1p(relay_power * inst.relay_destination_gains[i] / sigma2);
        const double power = (sigma2 / inst.source_relay_gains[i]) * std::expm1((gamma / beta) * down);
        if (power > inst.params.source_power_cap * (1.0 + 1e-9))
            throw std::runtime_error("recovered source power exceeds the cap; box clipping is broken");
        powers[i] = std::min(power, inst.params.source_power_cap);
    }
    return powers;
}

} // namespace wprn
