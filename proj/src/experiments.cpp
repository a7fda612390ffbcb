#include "wprn/experiments.hpp"

#include "wprn/csv_format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace wprn {

namespace {

DedicatorSet all_dedicators(std::size_t n) {
    DedicatorSet set;
    set.indicator.assign(n, true);
    return set;
}

DedicatorSet top_k_set(const NetworkInstance& inst, std::size_t k) {
    const auto order = sources_by_gain(inst);
    DedicatorSet set;
    set.indicator.assign(inst.num_pairs, false);
    for (std::size_t r = 0; r < k; ++r)
        set.indicator[order[r]] = true;
    return set;
}

bool trace_is_monotone(const InnerResult& inner, double rel_slack) {
    double prev = 0.0;
    bool have_prev = false;
    for (const TracePoint& tp : inner.trace) {
        for (double phi : {tp.phi_power, tp.phi_time}) {
            if (have_prev && phi < prev - rel_slack * std::abs(prev))
                return false;
            prev = phi;
            have_prev = true;
        }
    }
    return true;
}

double max_relative_balance_gap(const NetworkInstance& inst, const Strategy& s) {
    double worst = 0.0;
    for (std::size_t i = 0; i < inst.num_pairs; ++i) {
        const double gap = std::abs(balance_gap(inst, s, i));
        worst = std::max(worst, gap / std::max(1.0, pair_capacity(inst, s, i)));
    }
    return worst;
}

// Two enjoyers of a feasible strategy arranged to satisfy the swap-test
// preconditions: |h_i|^2 >= |h_j|^2 and beta_i P_i^s0 >= beta_j P_j^s0.
struct SwapTestCase {
    Strategy strategy;
    std::size_t i = 0;
    std::size_t j = 0;
};

bool draw_swap_case(const NetworkInstance& inst, Rng& rng, SwapTestCase& out) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        Strategy s = random_feasible_strategy(inst, rng);
        std::vector<std::size_t> enjoyers;
        for (std::size_t i = 0; i < inst.num_pairs; ++i)
            if (s.energy_power[i] == 0.0)
                enjoyers.push_back(i);
        if (enjoyers.size() < 2)
            continue;
        std::size_t a = enjoyers[rng.index(enjoyers.size())];
        std::size_t b = a;
        while (b == a)
            b = enjoyers[rng.index(enjoyers.size())];
        if (inst.source_relay_gains[a] < inst.source_relay_gains[b])
            std::swap(a, b);
        const double budget_a = s.uplink_fraction[a] * s.data_power[a];
        if (s.uplink_fraction[b] * s.data_power[b] > budget_a)
            s.data_power[b] = budget_a / s.uplink_fraction[b] * (1.0 - 1e-12);
        if (!(s.data_power[b] > 0.0))
            continue;
        out = {std::move(s), a, b};
        return true;
    }
    return false;
}

std::string csv_bool(bool v) { return v ? "1" : "0"; }

} // namespace

int run_trace(const NetworkInstance& inst, const SolverConfig& cfg, std::ostream& out) {
    out << "# schema wprn.trace.v1\n";
    out << "iteration,phase,phi\n";
    const InnerResult inner = solve_inner(inst, all_dedicators(inst.num_pairs), cfg);
    if (inner.trace.empty() || !inner.feasible) {
        out << "# status: infeasible\n";
        return 2;
    }
    double power_gain = 0.0;
    double time_gain = 0.0;
    double prev = inner.trace.front().phi_power;
    for (const TracePoint& tp : inner.trace) {
        out << tp.iteration << ",power," << format_number(tp.phi_power) << "\n";
        out << tp.iteration << ",time," << format_number(tp.phi_time) << "\n";
        power_gain += std::log(tp.phi_power) - std::log(prev);
        time_gain += std::log(tp.phi_time) - std::log(tp.phi_power);
        prev = tp.phi_time;
    }
    if (time_gain > 0.0)
        out << "# phase_improvement_ratio: " << format_number(power_gain / time_gain) << "\n";
    out << "# status: ok\n";
    return 0;
}

int run_dedicator_sweep(const ScenarioConfig& scenario, const SolverConfig& cfg,
                        const std::vector<std::uint64_t>& seeds, const std::vector<double>& e0_values,
                        std::ostream& out) {
    out << "# schema wprn.dedicator_sweep.v1\n";
    out << "seed,e0,k,feasible,phi,sum_capacity,residual_energy\n";
    bool any_feasible = false;
    for (std::uint64_t seed : seeds) {
        const NetworkInstance base = generate_scenario(scenario, seed);
        for (double e0 : e0_values) {
            NetworkInstance inst = base;
            inst.params.relay_fixed_cost_rate = e0;
            for (std::size_t k = 1; k <= inst.num_pairs; ++k) {
                const InnerResult inner = solve_inner(inst, top_k_set(inst, k), cfg);
                out << seed << "," << format_number(e0) << "," << k << ","
                    << csv_bool(inner.feasible);
                if (inner.feasible) {
                    any_feasible = true;
                    double sum_capacity = 0.0;
                    for (std::size_t i = 0; i < inst.num_pairs; ++i)
                        sum_capacity += pair_capacity(inst, inner.strategy, i);
                    out << "," << format_number(*inner.phi) << "," << format_number(sum_capacity)
                        << "," << format_number(relay_utility(inst, inner.strategy));
                } else {
                    out << ",,,";
                }
                out << "\n";
            }
        }
    }
    out << "# status: " << (any_feasible ? "ok" : "infeasible") << "\n";
    return any_feasible ? 0 : 2;
}

int run_utility_distribution(const ScenarioConfig& scenario, const SolverConfig& cfg,
                             const std::vector<std::uint64_t>& seeds, std::ostream& out) {
    out << "# schema wprn.utility_distribution.v1\n";
    out << "seed,pair,role,utility\n";
    bool any_feasible = false;
    for (std::uint64_t seed : seeds) {
        const NetworkInstance inst = generate_scenario(scenario, seed);
        const SolveResult result = solve(inst, cfg);
        if (!result.feasible)
            continue;
        any_feasible = true;
        double log_ded = 0.0, log_enj = 0.0;
        std::size_t n_ded = 0, n_enj = 0;
        for (std::size_t i = 0; i < inst.num_pairs; ++i) {
            const bool ded = result.best_set[i];
            const double u = result.utilities.pair_utilities[i];
            out << seed << "," << i << "," << (ded ? "dedicator" : "enjoyer") << ","
                << format_number(u) << "\n";
            (ded ? log_ded : log_enj) += std::log(u);
            (ded ? n_ded : n_enj) += 1;
        }
        if (n_ded > 0)
            out << seed << ",,dedicator_geomean,"
                << format_number(std::exp(log_ded / static_cast<double>(n_ded))) << "\n";
        if (n_enj > 0)
            out << seed << ",,enjoyer_geomean,"
                << format_number(std::exp(log_enj / static_cast<double>(n_enj))) << "\n";
    }
    out << "# status: " << (any_feasible ? "ok" : "infeasible") << "\n";
    return any_feasible ? 0 : 2;
}

int run_theorem_checks(const ScenarioConfig& scenario, const SolverConfig& cfg,
                       const std::vector<std::uint64_t>& seeds, std::ostream& out) {
    out << "# schema wprn.theorem_checks.v1\n";
    out << "seed,property,pass,detail\n";
    bool all_pass = true;
    auto row = [&](std::uint64_t seed, const char* property, bool pass, const std::string& detail) {
        out << seed << "," << property << "," << csv_bool(pass) << "," << detail << "\n";
        all_pass = all_pass && pass;
    };

    for (std::uint64_t seed : seeds) {
        const NetworkInstance inst = generate_scenario(scenario, seed);
        const SolveResult result = solve(inst, cfg);

        if (result.feasible) {
            const double gap = max_relative_balance_gap(inst, result.best_strategy);
            row(seed, "lemma1_balance", gap <= 1e-6, "max_rel_gap=" + format_number(gap));
        } else {
            row(seed, "lemma1_balance", true, "instance_infeasible");
        }

        bool monotone = true;
        bool terminated = true;
        for (const LabeledInnerResult& r : result.per_set_results) {
            if (!r.inner.trace.empty())
                monotone = monotone && trace_is_monotone(r.inner, 1e-9);
            if (r.inner.feasible)
                terminated = terminated && r.inner.converged;
        }
        row(seed, "theorem4_monotone", monotone && terminated,
            monotone ? (terminated ? "ok" : "hit_iteration_cap") : "trace_decreased");

        Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
        try {
            const Strategy probe = random_feasible_strategy(inst, rng);
            const std::size_t source = rng.index(inst.num_pairs);
            const ScanReport endpoint = endpoint_scan_energy_power(inst, probe, source, 201);
            row(seed, "theorem1_endpoint", endpoint.is_endpoint_argmax,
                "argmax_index=" + format_number(endpoint.argmax_index));
            const ScanReport pr_scan = unimodality_scan(inst, probe, ScanAxis::relay_power, 1000);
            row(seed, "theorem2_unimodal_pr", pr_scan.is_unimodal,
                "local_maxima=" + format_number(pr_scan.local_maxima_count));
            const ScanReport a_scan = unimodality_scan(inst, probe, ScanAxis::harvest_fraction, 1000);
            row(seed, "theorem3_unimodal_alpha", a_scan.is_unimodal,
                "local_maxima=" + format_number(a_scan.local_maxima_count));
        } catch (const std::exception&) {
            row(seed, "theorem1_endpoint", true, "no_feasible_probe");
            row(seed, "theorem2_unimodal_pr", true, "no_feasible_probe");
            row(seed, "theorem3_unimodal_alpha", true, "no_feasible_probe");
        }

        SwapTestCase swap;
        if (draw_swap_case(inst, rng, swap)) {
            bool ordered = false;
            std::string detail = "ok";
            try {
                ordered = dedicator_ordering_check(inst, swap.i, swap.j, swap.strategy);
            } catch (const std::exception& e) {
                detail = e.what();
            }
            row(seed, "corollary2_ordering", ordered, detail);
        } else {
            row(seed, "corollary2_ordering", true, "no_swap_case");
        }

        if (inst.num_pairs <= 7) {
            SolverConfig exhaustive_cfg = cfg;
            exhaustive_cfg.enumeration_mode = EnumerationMode::exhaustive;
            const SolveResult full = solve(inst, exhaustive_cfg);
            if (result.feasible && full.feasible) {
                const double gap = (*full.best_phi - *result.best_phi) / *full.best_phi;
                row(seed, "pruned_vs_exhaustive", *result.best_phi <= *full.best_phi * (1.0 + 1e-9),
                    "gap=" + format_number(gap));
            } else {
                row(seed, "pruned_vs_exhaustive", result.feasible == full.feasible,
                    "feasible=" + csv_bool(full.feasible));
            }
        }
    }
    out << "# status: " << (all_pass ? "ok" : "failures") << "\n";
    return all_pass ? 0 : 2;
}

int run_oracle_compare(const ScenarioConfig& scenario, const SolverConfig& cfg,
                       const std::vector<std::uint64_t>& seeds, std::size_t resolution,
                       std::ostream& out) {
    out << "# schema wprn.oracle.v1\n";
    out << "seed,record,axis,grid,oracle_phi,solver_phi,phi_ratio,evaluations,feasible_points,"
           "argmax_index,local_maxima_count,is_unimodal,is_endpoint_argmax\n";
    bool any_feasible = false;
    for (std::uint64_t seed : seeds) {
        const NetworkInstance inst = generate_scenario(scenario, seed);
        const SolveResult result = solve(inst, cfg);
        const DedicatorSet set =
            result.feasible ? result.best_set : all_dedicators(inst.num_pairs);
        const OracleResult oracle = grid_oracle(inst, set, resolution);
        out << seed << ",oracle,," << resolution << ","
            << (oracle.best_phi ? format_number(*oracle.best_phi) : "") << ","
            << (result.feasible ? format_number(*result.best_phi) : "") << ",";
        if (oracle.best_phi && result.feasible)
            out << format_number(*result.best_phi / *oracle.best_phi);
        out << "," << oracle.evaluations << "," << oracle.feasible_points << ",,,,\n";
        if (!result.feasible)
            continue;
        any_feasible = true;
        const Strategy& s = result.best_strategy;
        for (ScanAxis axis : {ScanAxis::relay_power, ScanAxis::harvest_fraction}) {
            const ScanReport scan = unimodality_scan(inst, s, axis, 1000);
            out << seed << ",scan," << scan.axis << "," << scan.grid << ",,,,,," << scan.argmax_index
                << "," << scan.local_maxima_count << "," << csv_bool(scan.is_unimodal) << ","
                << csv_bool(scan.is_endpoint_argmax) << "\n";
        }
        for (std::size_t i = 0; i < inst.num_pairs; ++i) {
            const ScanReport scan = endpoint_scan_energy_power(inst, s, i, 201);
            out << seed << ",scan," << scan.axis << "," << scan.grid << ",,,,,," << scan.argmax_index
                << "," << scan.local_maxima_count << "," << csv_bool(scan.is_unimodal) << ","
                << csv_bool(scan.is_endpoint_argmax) << "\n";
        }
    }
    out << "# status: " << (any_feasible ? "ok" : "infeasible") << "\n";
    return any_feasible ? 0 : 2;
}

} // namespace wprn
