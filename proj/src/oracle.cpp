#include "wprn/oracle.hpp"

#include "wprn/scan_utils.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wprn {

namespace {

constexpr double kPlateauTol = 1e-12;

std::vector<double> right_closed_grid(double hi, std::size_t r) {
    std::vector<double> pts(r);
    for (std::size_t j = 1; j <= r; ++j)
        pts[j - 1] = hi * static_cast<double>(j) / static_cast<double>(r);
    return pts;
}

ScanReport report_from_samples(std::string axis, const std::vector<double>& samples) {
    ScanReport report;
    report.axis = std::move(axis);
    report.grid = samples.size();
    report.argmax_index = argmax_index(samples);
    report.local_maxima_count = count_local_maxima(samples, kPlateauTol);
    report.is_unimodal = report.local_maxima_count <= 1;
    report.is_endpoint_argmax = report.argmax_index < samples.size() &&
                                (report.argmax_index <= 1 || report.argmax_index + 2 >= samples.size());
    return report;
}

double phi_or_neg_inf(const NetworkInstance& inst, const Strategy& s) {
    const auto phi = nash_product(inst, s);
    return phi.has_value() ? *phi : kInfeasiblePhi;
}

struct OracleBest {
    double phi = kInfeasiblePhi;
    double alpha = 0.0;
    double relay_power = 0.0;
    std::vector<double> gamma;
    std::vector<double> beta;
    std::vector<double> data_power;
};

} // namespace

OracleResult grid_oracle(const NetworkInstance& inst, const DedicatorSet& dedicators,
                         std::size_t resolution) {
    if (inst.num_pairs > 2)
        throw std::invalid_argument("grid oracle supports N <= 2 only");
    if (dedicators.size() != inst.num_pairs || dedicators.count() == 0)
        throw std::invalid_argument("grid oracle needs a non-empty dedicator set");
    if (resolution < 2)
        throw std::invalid_argument("resolution must be >= 2");

    const PhysicalParams& p = inst.params;
    const std::size_t n = inst.num_pairs;
    const double t = p.block_time;
    const double sigma2 = p.noise_power;
    const double theta0 = p.min_pair_time_fraction;
    const double e0 = p.relay_fixed_cost();
    const double ln2 = std::numbers::ln2_v<double>;

    double harvest_rate = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (dedicators[i])
            harvest_rate += p.conversion_efficiency * p.source_power_cap * t * inst.source_relay_gains[i];

    const auto alphas = right_closed_grid(1.0 - static_cast<double>(n) * theta0, resolution);
    const auto gammas = right_closed_grid(1.0 - static_cast<double>(n - 1) * theta0, resolution);
    const auto relays = right_closed_grid(p.relay_power_cap, resolution);

    // Downlink log-rates per pair and relay-power sample.
    std::vector<std::vector<double>> down_ln(n, std::vector<double>(resolution));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t np_ = 0; np_ < resolution; ++np_)
            down_ln[i][np_] = std::log1p(relays[np_] * inst.relay_destination_gains[i] / sigma2);

    OracleResult out;
    out.grid_resolution.assign(n + 2, resolution);
    OracleBest best;
    best.gamma.assign(n, 0.0);
    best.beta.assign(n, 0.0);
    best.data_power.assign(n, 0.0);

    std::vector<double> gamma(n), beta(n), ps0(n);
    const std::size_t g2_count = n == 2 ? resolution : 1;
    for (std::size_t ai = 0; ai < resolution; ++ai) {
        const double alpha = alphas[ai];
        const double harvest = harvest_rate * alpha;
        for (std::size_t g1 = 0; g1 < resolution; ++g1) {
            gamma[0] = gammas[g1];
            for (std::size_t g2 = 0; g2 < g2_count; ++g2) {
                if (n == 2)
                    gamma[1] = gammas[g2];
                double gamma_sum = 0.0;
                for (double g : gamma)
                    gamma_sum += g;
                const double beta_total = 1.0 - alpha - gamma_sum;
                if (!(beta_total > 0.0))
                    continue;
                // Budget closes the uplink fractions: the single pair takes the
                // whole remainder; with two pairs it splits at a common
                // beta/gamma ratio.
                const double ratio = beta_total / gamma_sum;
                bool qos_ok = true;
                for (std::size_t i = 0; i < n; ++i) {
                    beta[i] = ratio * gamma[i];
                    if (beta[i] + gamma[i] < theta0 * (1.0 - 1e-12))
                        qos_ok = false;
                }
                if (!qos_ok)
                    continue;
                const double inv_ratio = 1.0 / ratio; // exponent gamma_i / beta_i
                for (std::size_t np_ = 0; np_ < resolution; ++np_) {
                    const double relay_utility = harvest - e0 - relays[np_] * t * gamma_sum;
                    if (!(relay_utility > 0.0))
                        break; // decreasing in the relay power
                    ++out.evaluations;
                    bool cap_ok = true;
                    double phi = relay_utility;
                    for (std::size_t i = 0; i < n; ++i) {
                        ps0[i] = (sigma2 / inst.source_relay_gains[i]) *
                                 std::expm1(inv_ratio * down_ln[i][np_]);
                        if (ps0[i] > p.source_power_cap * (1.0 + 1e-12)) {
                            cap_ok = false;
                            break;
                        }
                        const double bits = gamma[i] * down_ln[i][np_] / ln2;
                        const double spent =
                            (dedicators[i] ? alpha * p.source_power_cap : 0.0) + ps0[i] * beta[i];
                        phi *= bits / spent;
                    }
                    if (!cap_ok)
                        break; // source powers grow with the relay power
                    ++out.feasible_points;
                    if (phi > best.phi) {
                        best.phi = phi;
                        best.alpha = alpha;
                        best.relay_power = relays[np_];
                        best.gamma = gamma;
                        best.beta = beta;
                        best.data_power = ps0;
                    }
                }
            }
        }
    }

    if (std::isfinite(best.phi)) {
        out.best_phi = best.phi;
        Strategy s = Strategy::zeros(n);
        s.energy_power = apply_dedicators(inst, dedicators);
        for (std::size_t i = 0; i < n; ++i)
            s.harvest_fraction[i] = dedicators[i] ? best.alpha : 0.0;
        s.uplink_fraction = best.beta;
        s.downlink_fraction = best.gamma;
        s.relay_power = best.relay_power;
        s.data_power = best.data_power;
        out.best_point = std::move(s);
    }
    return out;
}

ScanReport unimodality_scan(const NetworkInstance& inst, const Strategy& strategy, ScanAxis axis,
                            std::size_t grid) {
    if (grid < 3)
        throw std::invalid_argument("scan grid must be >= 3");
    std::vector<double> samples(grid);

    if (axis == ScanAxis::relay_power) {
        for (std::size_t k = 0; k < grid; ++k) {
            Strategy s = strategy;
            s.relay_power = inst.params.relay_power_cap * static_cast<double>(k) /
                            static_cast<double>(grid - 1);
            samples[k] = check_feasible(inst, s).feasible ? phi_or_neg_inf(inst, s) : kInfeasiblePhi;
        }
        return report_from_samples("relay_power", samples);
    }

    const double alpha0 = strategy.max_harvest_fraction();
    const double alpha_hi =
        1.0 - static_cast<double>(inst.num_pairs) * inst.params.min_pair_time_fraction;
    for (std::size_t k = 0; k < grid; ++k) {
        const double alpha = alpha_hi * static_cast<double>(k) / static_cast<double>(grid - 1);
        const double scale = (1.0 - alpha) / (1.0 - alpha0);
        Strategy s = strategy;
        for (std::size_t i = 0; i < inst.num_pairs; ++i) {
            s.uplink_fraction[i] *= scale;
            s.downlink_fraction[i] *= scale;
            if (s.harvest_fraction[i] > 0.0)
                s.harvest_fraction[i] = alpha;
        }
        samples[k] = check_feasible(inst, s).feasible ? phi_or_neg_inf(inst, s) : kInfeasiblePhi;
    }
    return report_from_samples("harvest_fraction", samples);
}

ScanReport endpoint_scan_energy_power(const NetworkInstance& inst, const Strategy& strategy,
                                      std::size_t i, std::size_t grid) {
    if (i >= inst.num_pairs)
        throw std::out_of_range("pair index out of range");
    if (grid < 3)
        throw std::invalid_argument("scan grid must be >= 3");
    std::vector<double> samples(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        Strategy s = strategy;
        s.energy_power[i] =
            inst.params.source_power_cap * static_cast<double>(k) / static_cast<double>(grid - 1);
        samples[k] = phi_or_neg_inf(inst, s);
    }
    return report_from_samples("energy_power(" + std::to_string(i) + ")", samples);
}

Strategy random_feasible_strategy(const NetworkInstance& inst, Rng& rng) {
    const PhysicalParams& p = inst.params;
    const std::size_t n = inst.num_pairs;
    const double theta0 = p.min_pair_time_fraction;
    const double alpha_hi = 1.0 - static_cast<double>(n) * theta0;

    for (int attempt = 0; attempt < 1000; ++attempt) {
        const std::size_t k = 1 + rng.index(n);
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i)
            order[i] = i;
        for (std::size_t i = n; i > 1; --i)
            std::swap(order[i - 1], order[rng.index(i)]);
        DedicatorSet set;
        set.indicator.assign(n, false);
        for (std::size_t r = 0; r < k; ++r)
            set.indicator[order[r]] = true;

        double rate = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (set[i])
                rate += p.conversion_efficiency * p.source_power_cap * p.block_time *
                        inst.source_relay_gains[i];
        const double alpha_lo = p.relay_fixed_cost() > 0.0
                                    ? 1.2 * p.relay_fixed_cost() / rate
                                    : 0.05 * alpha_hi;
        if (!(alpha_lo < 0.95 * alpha_hi))
            continue; // this subset cannot cover the fixed cost, redraw
        const double alpha = rng.uniform(alpha_lo, 0.95 * alpha_hi);

        Strategy s = Strategy::zeros(n);
        s.energy_power = apply_dedicators(inst, set);
        std::vector<double> extra(n);
        double extra_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            extra[i] = rng.uniform(0.05, 1.0);
            extra_sum += extra[i];
        }
        const double spare = (1.0 - alpha) - static_cast<double>(n) * theta0;
        for (std::size_t i = 0; i < n; ++i) {
            const double share = theta0 + spare * extra[i] / extra_sum;
            const double uplink_part = rng.uniform(0.25, 0.75);
            s.uplink_fraction[i] = share * uplink_part;
            s.downlink_fraction[i] = share - s.uplink_fraction[i];
            s.harvest_fraction[i] = set[i] ? alpha : 0.0;
            s.data_power[i] = p.source_power_cap * rng.uniform(0.1, 1.0);
        }

        double gamma_sum = 0.0;
        for (double g : s.downlink_fraction)
            gamma_sum += g;
        const double energy = rate * alpha;
        const double pr_cap = std::min(
            p.relay_power_cap, 0.9 * (energy - p.relay_fixed_cost()) / (gamma_sum * p.block_time));
        if (!(pr_cap > 0.0))
            continue;
        s.relay_power = pr_cap * rng.uniform(0.1, 1.0);

        if (check_feasible(inst, s).feasible)
            return s;
    }
    throw std::runtime_error("could not draw a feasible strategy for this instance");
}

} // namespace wprn
