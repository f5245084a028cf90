#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "splitplan/baselines.hpp"
#include "splitplan/nsga2.hpp"
#include "splitplan/oracle.hpp"
#include "splitplan/profile_io.hpp"
#include "splitplan/report.hpp"
#include "splitplan/topsis.hpp"

namespace {

using namespace splitplan;

struct CommonOptions {
    std::string model_path;
    std::string device_path;
    GaConfig ga;
    std::string normalization = "vector";
    std::int64_t memory_cap = ProblemInstance::kDefaultMemoryCapBytes;
    std::optional<double> bandwidth;
    std::string output;
};

void add_instance_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("model", opts.model_path, "model profile JSON")->required();
    cmd->add_option("device", opts.device_path,
                    "device/network config JSON (built-in reference config when omitted)");
    cmd->add_option("--memory-cap", opts.memory_cap, "client memory cap in bytes")
        ->capture_default_str();
    cmd->add_option("--bandwidth", opts.bandwidth,
                    "override link bandwidth in Mbps (upload/download throughput follow)");
}

void add_ga_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--seed", opts.ga.seed, "random seed")->capture_default_str();
    cmd->add_option("--pop", opts.ga.population_size, "population size")->capture_default_str();
    cmd->add_option("--gens", opts.ga.generations, "generations")->capture_default_str();
    cmd->add_option("--mutation", opts.ga.mutation_rate, "mutation rate")->capture_default_str();
    cmd->add_option("--crossover", opts.ga.crossover_rate, "crossover rate")
        ->capture_default_str();
    cmd->add_option("--normalization", opts.normalization, "decision-matrix normalization")
        ->check(CLI::IsMember({"vector", "minmax"}))
        ->capture_default_str();
}

Normalization normalization_of(const CommonOptions& opts) {
    return opts.normalization == "minmax" ? Normalization::minmax : Normalization::vector;
}

ProblemInstance build_instance(const CommonOptions& opts) {
    ModelProfile model = load_model_profile(opts.model_path);
    InstanceConfig config =
        opts.device_path.empty() ? default_instance_config() : load_instance_config(opts.device_path);
    if (opts.bandwidth) {
        // Saturating-link override: the throughputs track the new rate.
        config.network.bandwidth_mbps = *opts.bandwidth;
        config.network.tau_u_mbps = *opts.bandwidth;
        config.network.tau_d_mbps = *opts.bandwidth;
    }
    return ProblemInstance(std::move(model), config.client, config.server, config.network,
                           opts.memory_cap);
}

int cmd_optimize(const CommonOptions& opts) {
    const ProblemInstance instance = build_instance(opts);
    const ParetoSet pareto = evolve(instance, opts.ga);
    const auto [chosen, analysis] = select_best_traced(pareto, instance, normalization_of(opts));
    const nlohmann::json plan =
        plan_json(instance, pareto, analysis, chosen, opts.ga, normalization_of(opts));
    if (opts.output == "table")
        std::cout << plan_table(plan);
    else
        std::cout << plan.dump(2) << '\n';
    return 0;
}

int cmd_sweep(const CommonOptions& opts) {
    const ProblemInstance instance = build_instance(opts);
    const auto entries = enumerate_splits(instance);
    const TrueSelection selection = true_selection(instance, normalization_of(opts));
    if (opts.output == "json")
        std::cout << sweep_json(entries, selection).dump(2) << '\n';
    else
        std::cout << sweep_csv(entries, selection);
    return 0;
}

int cmd_compare(const CommonOptions& opts) {
    const ProblemInstance instance = build_instance(opts);

    std::vector<ComparisonRow> rows;
    {
        const ParetoSet pareto = evolve(instance, opts.ga);
        const Individual chosen = select_best(pareto, instance, normalization_of(opts));
        rows.push_back({"splitplan", chosen.candidate.l1, chosen.objectives, true});
    }
    for (BaselineKind kind : {BaselineKind::lbo, BaselineKind::ebo, BaselineKind::cos,
                              BaselineKind::coc, BaselineKind::rs}) {
        const BaselineResult result = run_baseline(kind, instance, opts.ga.seed);
        rows.push_back({std::string(to_string(kind)), result.l1, result.objectives,
                        result.within_split_set});
    }

    if (opts.output == "json")
        std::cout << compare_json(rows).dump(2) << '\n';
    else if (opts.output == "csv")
        std::cout << compare_csv(rows);
    else
        std::cout << compare_table(rows);
    return 0;
}

int cmd_profile(const CommonOptions& opts) {
    const ModelProfile model = load_model_profile(opts.model_path);
    if (opts.output == "json")
        std::cout << profile_json(model).dump(2) << '\n';
    else
        std::cout << profile_table(model);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CNN split planner: minimizes end-to-end latency, client energy and client "
                 "memory over the layer at which inference moves to the server"};
    app.require_subcommand(1);

    CommonOptions optimize_opts, sweep_opts, compare_opts, profile_opts;

    CLI::App* optimize = app.add_subcommand(
        "optimize", "search the split space and emit the selected plan");
    add_instance_options(optimize, optimize_opts);
    add_ga_options(optimize, optimize_opts);
    optimize->add_option("--output", optimize_opts.output, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* sweep = app.add_subcommand("sweep", "enumerate every split as plot data");
    add_instance_options(sweep, sweep_opts);
    sweep->add_option("--normalization", sweep_opts.normalization, "decision-matrix normalization")
        ->check(CLI::IsMember({"vector", "minmax"}));
    sweep->add_option("--output", sweep_opts.output, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* compare =
        app.add_subcommand("compare", "run the planner and the five baseline strategies");
    add_instance_options(compare, compare_opts);
    add_ga_options(compare, compare_opts);
    compare->add_option("--output", compare_opts.output, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CLI::App* profile = app.add_subcommand("profile", "print the per-layer cost table");
    profile->add_option("model", profile_opts.model_path, "model profile JSON")->required();
    profile->add_option("--output", profile_opts.output, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (optimize->parsed()) return cmd_optimize(optimize_opts);
        if (sweep->parsed()) return cmd_sweep(sweep_opts);
        if (compare->parsed()) return cmd_compare(compare_opts);
        if (profile->parsed()) return cmd_profile(profile_opts);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const NoFeasibleSolution& e) {
        std::cerr << "no feasible solution: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
