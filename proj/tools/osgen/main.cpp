// SPDX-License-Identifier: Apache-2.0
// osgen command-line tool. Failures print one line
// "osgen: error: <category>: <message>" on stderr and exit nonzero.
#include <CLI11.hpp>

#include <exception>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "osgen/error.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int report(std::string_view category, std::string_view message) {
    std::cerr << "osgen: error: " << category << ": " << message << "\n";
    return kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    using namespace osgen::cli;
    CLI::App app{"Optimisation system generator and benchmark tool", "osgen"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    Common common;
    std::string config;
    app.add_option("--config", config, "JSON file with backend, endpoint and limit settings")->check(CLI::ExistingFile);
    app.add_option("--problem", common.problem, "tsp, gtsp, ap or etp (default: the description's directory name)");

    std::function<int()> action;

    DescribeCheckArgs dc;
    auto* c_dc = app.add_subcommand("describe-check", "Parse a problem description and check its files");
    c_dc->add_option("description", dc.description, "Problem description file")->required()->check(CLI::ExistingFile);
    c_dc->callback([&] { action = [&] { return describe_check(common, dc); }; });

    GenerateArgs gen;
    auto* c_gen = app.add_subcommand("generate", "Generate an optimisation system from a description");
    c_gen->add_option("description", gen.description, "Problem description file")->required()->check(CLI::ExistingFile);
    c_gen->add_option("--kind", gen.kind, "Free, SA, TS, ILS, MIP or CMCS")->capture_default_str();
    c_gen->add_option("--backend", gen.backend, "mock or http (default: config file, else mock)");
    c_gen->add_option("--script", gen.script, "Mock response script (JSON)");
    c_gen->add_option("--endpoint", gen.endpoint, "Chat completions URL for the http backend");
    c_gen->add_option("--model", gen.model, "Model name for the http backend");
    c_gen->add_option("--temperature", gen.temperature, "Sampling temperature for the http backend");
    c_gen->add_option("--out", gen.out, "Output directory")->required();
    c_gen->add_option("--seed", gen.seed, "Seed for validation and training")->capture_default_str();
    c_gen->add_option("--validation-budget-ms", gen.validation_budget_ms, "Budget of validation runs");
    c_gen->add_option("--training-budget-ms", gen.training_budget_ms, "Budget of each training run");
    c_gen->add_option("--training-instances", gen.training_instances, "Training instances sampled");
    c_gen->add_option("--threads", gen.threads, "Concurrent training runs");
    c_gen->callback([&] { action = [&] { return generate(common, gen); }; });

    TrainArgs tr;
    auto* c_tr = app.add_subcommand("train", "Select a CMCS configuration for the built-in solver");
    c_tr->add_option("description", tr.description, "Problem description file")->required()->check(CLI::ExistingFile);
    c_tr->add_option("--budget-ms", tr.budget_ms, "Budget of each run")->capture_default_str();
    c_tr->add_option("--iterations", tr.iterations, "Iteration budget of each run instead of time");
    c_tr->add_option("--seed", tr.seed, "Seed")->capture_default_str();
    c_tr->add_option("--max-instances", tr.max_instances, "Training instances sampled")->capture_default_str();
    c_tr->add_option("--threads", tr.threads, "Concurrent runs")->capture_default_str();
    c_tr->add_option("--out", tr.out, "Configuration file written")->capture_default_str();
    c_tr->add_option("--report", tr.report, "Training table (TSV) written");
    c_tr->callback([&] { action = [&] { return train(common, tr); }; });

    SolveArgs so;
    auto* c_so = app.add_subcommand("solve", "Solve one instance and print the objective");
    c_so->add_option("description", so.description, "Problem description file")->required()->check(CLI::ExistingFile);
    c_so->add_option("instance", so.instance, "Instance file")->required()->check(CLI::ExistingFile);
    c_so->add_option("--budget-ms", so.budget_ms, "Time budget")->capture_default_str();
    c_so->add_option("--iterations", so.iterations, "Iteration budget instead of time (native only)");
    c_so->add_option("--seed", so.seed, "Seed")->capture_default_str();
    c_so->add_option("--solver", so.solver, "native or os:<dir>")->capture_default_str();
    c_so->add_option("--configuration", so.configuration, "CMCS configuration for the native solver");
    c_so->add_option("--out", so.out, "Solution file written")->capture_default_str();
    c_so->callback([&] { action = [&] { return solve(common, so); }; });

    ValidateArgs va;
    auto* c_va = app.add_subcommand("validate", "Run the dynamic tests and mutation checks");
    c_va->add_option("description", va.description, "Problem description file")->required()->check(CLI::ExistingFile);
    c_va->add_option("--solver", va.solver, "native or os:<dir>")->capture_default_str();
    c_va->add_option("--budget-ms", va.budget_ms, "Budget of the timed run")->capture_default_str();
    c_va->add_option("--seed", va.seed, "Seed")->capture_default_str();
    c_va->add_option("--mutation-trials", va.mutation_trials, "Trials per mutation")->capture_default_str();
    c_va->add_option("--report", va.report, "Outcomes (JSON lines) written");
    c_va->callback([&] { action = [&] { return validate(common, va); }; });

    BenchArgs be;
    auto* c_be = app.add_subcommand("bench", "Gap to best-known values across time budgets");
    c_be->add_option("description", be.description, "Problem description file")->required()->check(CLI::ExistingFile);
    c_be->add_option("--instances", be.instances, "Instance files (default: the description's training set)")
        ->check(CLI::ExistingFile);
    c_be->add_option("--solver", be.solver, "native or os:<dir>")->capture_default_str();
    c_be->add_option("--budgets-ms", be.budgets_ms, "Time budgets")->delimiter(',')->capture_default_str();
    c_be->add_option("--iterations", be.iterations, "Single iteration budget instead of time (native only)");
    c_be->add_option("--seeds", be.seeds, "Seeds")->delimiter(',')->capture_default_str();
    c_be->add_option("--threads", be.threads, "Concurrent runs (native only)")->capture_default_str();
    c_be->add_option("--best-known", be.best_known, "Best-known table (default: <out-dir>/best_known.csv)");
    c_be->add_option("--out-dir", be.out_dir, "Report directory")->capture_default_str();
    c_be->callback([&] { action = [&] { return bench(common, be); }; });

    MakeInstancesArgs mi;
    auto* c_mi = app.add_subcommand("make-instances", "Write the ten generated instances of a problem");
    c_mi->add_option("--seed", mi.seed, "Generator seed")->capture_default_str();
    c_mi->add_option("--out", mi.out, "Output directory")->capture_default_str();
    c_mi->callback([&] { action = [&] { return make_instances(common, mi); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "osgen: error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!config.empty()) common.config = config;
        return action();
    } catch (const osgen::Error& e) {
        return report(e.category(), e.what());
    } catch (const std::exception& e) {
        return report("internal", e.what());
    }
}
