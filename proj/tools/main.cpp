#include "wprn/experiments.hpp"
#include "wprn/io.hpp"
#include "wprn/network.hpp"
#include "wprn/solver.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string seeds_spec;
    std::string instance_path;
    std::string out_path;
    std::string mode;
    std::string power_mode;
    std::string time_mode;
    std::vector<double> e0_values;
};

std::vector<std::uint64_t> parse_seeds(const std::string& spec, std::uint64_t fallback) {
    if (spec.empty())
        return {fallback};
    const auto dots = spec.find("..");
    std::vector<std::uint64_t> seeds;
    if (dots != std::string::npos) {
        const std::uint64_t lo = std::stoull(spec.substr(0, dots));
        const std::uint64_t hi = std::stoull(spec.substr(dots + 2));
        if (hi < lo)
            throw std::invalid_argument("seed range must be ascending");
        for (std::uint64_t s = lo; s <= hi; ++s)
            seeds.push_back(s);
        return seeds;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        const auto comma = spec.find(',', pos);
        const std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        seeds.push_back(std::stoull(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return seeds;
}

wprn::AppConfig load_config(const CommonOptions& opt) {
    wprn::AppConfig cfg =
        opt.config_path.empty() ? wprn::default_app_config() : wprn::load_app_config(opt.config_path);
    if (opt.seed.has_value())
        cfg.seed = *opt.seed;
    if (!opt.mode.empty())
        cfg.solver.enumeration_mode = opt.mode == "exhaustive" ? wprn::EnumerationMode::exhaustive
                                                               : wprn::EnumerationMode::pruned;
    if (!opt.power_mode.empty())
        cfg.solver.power_mode = opt.power_mode == "dual-ascent" ? wprn::PowerMode::dual_ascent
                                                                : wprn::PowerMode::golden_section;
    if (!opt.time_mode.empty())
        cfg.solver.time_mode = opt.time_mode == "dual-ascent" ? wprn::TimeMode::dual_ascent
                                                              : wprn::TimeMode::substitution;
    return cfg;
}

wprn::NetworkInstance make_instance(const CommonOptions& opt, const wprn::AppConfig& cfg) {
    wprn::NetworkInstance inst = opt.instance_path.empty()
                                     ? wprn::generate_scenario(cfg.scenario, cfg.seed)
                                     : wprn::load_instance(opt.instance_path);
    if (opt.e0_values.size() == 1)
        inst.params.relay_fixed_cost_rate = opt.e0_values.front();
    return inst;
}

// Streams either to --out or stdout.
class OutputStream {
  public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
            if (!*file_)
                throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_seeds, bool with_e0) {
    cmd->add_option("--config", opt.config_path, "JSON configuration file");
    cmd->add_option("--seed", opt.seed, "scenario seed (overrides the config)");
    if (with_seeds)
        cmd->add_option("--seeds", opt.seeds_spec, "seed range a..b or comma list");
    cmd->add_option("--mode", opt.mode, "dedicator enumeration: pruned|exhaustive")
        ->check(CLI::IsMember({"pruned", "exhaustive"}));
    cmd->add_option("--power-mode", opt.power_mode, "golden-section|dual-ascent")
        ->check(CLI::IsMember({"golden-section", "dual-ascent"}));
    cmd->add_option("--time-mode", opt.time_mode, "substitution|dual-ascent")
        ->check(CLI::IsMember({"substitution", "dual-ascent"}));
    cmd->add_option("--out", opt.out_path, "output path (stdout when omitted)");
    if (with_e0)
        cmd->add_option("--e0", opt.e0_values, "relay fixed-cost rate values, mW")->delimiter(',');
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nash bargaining resource allocation for wireless-powered relay networks"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string experiment = "dedicators";
    std::size_t resolution = 200;

    CLI::App* generate = app.add_subcommand("generate", "generate a network instance");
    add_common(generate, opt, false, false);

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve one instance");
    add_common(solve_cmd, opt, false, true);
    solve_cmd->add_option("--instance", opt.instance_path, "instance JSON to replay");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep experiments");
    add_common(sweep, opt, true, true);
    sweep->add_option("--experiment", experiment, "dedicators|utility")
        ->check(CLI::IsMember({"dedicators", "utility"}));

    CLI::App* trace = app.add_subcommand("trace", "convergence trace of the inner loop");
    add_common(trace, opt, false, true);
    trace->add_option("--instance", opt.instance_path, "instance JSON to replay");

    CLI::App* oracle = app.add_subcommand("oracle", "grid-oracle comparison (N <= 2)");
    add_common(oracle, opt, true, true);
    oracle->add_option("--resolution", resolution, "grid points per axis");

    CLI::App* check = app.add_subcommand("check", "theorem checks over seeds");
    add_common(check, opt, true, true);

    CLI11_PARSE(app, argc, argv);

    try {
        wprn::AppConfig cfg = load_config(opt);
        if (opt.e0_values.size() == 1)
            cfg.scenario.params.relay_fixed_cost_rate = opt.e0_values.front();
        const auto seeds = parse_seeds(opt.seeds_spec, cfg.seed);

        if (generate->parsed()) {
            const auto inst = wprn::generate_scenario(cfg.scenario, cfg.seed);
            OutputStream out(opt.out_path);
            out.get() << wprn::instance_to_json(inst);
            return 0;
        }
        if (solve_cmd->parsed()) {
            const auto inst = make_instance(opt, cfg);
            const auto result = wprn::solve(inst, cfg.solver);
            if (!opt.out_path.empty())
                wprn::save_solve_result(result, opt.out_path);
            if (result.feasible) {
                std::cout << "phi=" << *result.best_phi << " dedicators=" << result.best_set.count()
                          << " alternations=" << result.total_alternations << "\n";
                return 0;
            }
            std::cout << "infeasible\n";
            return 2;
        }
        if (sweep->parsed()) {
            OutputStream out(opt.out_path);
            if (experiment == "utility")
                return wprn::run_utility_distribution(cfg.scenario, cfg.solver, seeds, out.get());
            std::vector<double> e0 = opt.e0_values;
            if (e0.empty())
                e0 = {0.0, 0.04, 0.08, 0.12, 0.16, 0.2};
            return wprn::run_dedicator_sweep(cfg.scenario, cfg.solver, seeds, e0, out.get());
        }
        if (trace->parsed()) {
            const auto inst = make_instance(opt, cfg);
            OutputStream out(opt.out_path);
            return wprn::run_trace(inst, cfg.solver, out.get());
        }
        if (oracle->parsed()) {
            OutputStream out(opt.out_path);
            return wprn::run_oracle_compare(cfg.scenario, cfg.solver, seeds, resolution, out.get());
        }
        if (check->parsed()) {
            OutputStream out(opt.out_path);
            return wprn::run_theorem_checks(cfg.scenario, cfg.solver, seeds, out.get());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
