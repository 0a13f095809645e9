// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>

#include "osgen/bench.hpp"
#include "osgen/description.hpp"
#include "osgen/error.hpp"
#include "osgen/generator/generated_os.hpp"
#include "osgen/generator/orchestrator.hpp"
#include "osgen/native_session.hpp"
#include "osgen/problems/dispatch.hpp"
#include "osgen/problems/generators.hpp"
#include "osgen/problems/text.hpp"
#include "osgen/reference_solver.hpp"
#include "osgen/trainer.hpp"
#include "osgen/validation.hpp"
#include "settings.hpp"

namespace osgen::cli {

namespace {

/// Operation-level failure with its own category on the error stream.
class CommandFailure : public Error {
public:
    CommandFailure(std::string category, const std::string& message)
        : Error(message), category_(std::move(category)) {}
    [[nodiscard]] const char* category() const noexcept override { return category_.c_str(); }

private:
    std::string category_;
};

std::string number(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return {buf.data(), ptr};
}

std::string read(const fs::path& path) { return text::read_file(path.string()); }

void write(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
}

std::optional<ProblemKind> optional_problem(const Common& common, const fs::path& description) {
    if (!common.problem.empty()) return parse_problem_kind(common.problem);
    const auto dir = fs::absolute(description).parent_path().filename().string();
    try {
        return parse_problem_kind(dir);
    } catch (const ConfigError&) {
        return std::nullopt;
    }
}

ProblemKind require_problem(const Common& common, const fs::path& description) {
    if (auto k = optional_problem(common, description)) return *k;
    throw ConfigError("cannot infer the problem from '" + description.string() + "'; pass --problem");
}

Budget budget_of(double ms, const std::optional<std::uint64_t>& iterations) {
    return iterations ? Budget::of_iterations(*iterations) : Budget::millis(ms);
}

/// "os:<dir>" names a generated system; anything else must be "native".
std::optional<fs::path> os_dir(const std::string& solver) {
    if (solver == "native") return std::nullopt;
    if (solver.rfind("os:", 0) == 0 && solver.size() > 3) return fs::path(solver.substr(3));
    throw ConfigError("unknown solver '" + solver + "' (expected native or os:<dir>)");
}

std::vector<fs::path> instance_set(const ProblemDescription& desc) {
    if (!desc.training_instances.empty()) return desc.training_instances;
    std::vector<fs::path> out;
    for (const auto& e : desc.examples) out.push_back(e.instance_path);
    return out;
}

/// File stems, or paths when stems clash.
std::vector<std::string> instance_ids(const std::vector<fs::path>& paths) {
    std::vector<std::string> ids;
    std::set<std::string> seen;
    bool clash = false;
    for (const auto& p : paths) {
        ids.push_back(p.stem().string());
        clash |= !seen.insert(ids.back()).second;
    }
    if (clash)
        for (std::size_t i = 0; i < paths.size(); ++i) ids[i] = paths[i].lexically_normal().string();
    return ids;
}

void print_outcomes(const validation::ValidationReport& report) {
    for (const auto& o : report.outcomes) {
        std::string status(validation::to_string(o.status));
        std::transform(status.begin(), status.end(), status.begin(), [](unsigned char c) { return std::toupper(c); });
        std::cout << status << "  " << report.unit << ": " << o.test_name << "\n";
        if (o.failure) {
            std::cout << "      " << o.failure->error_type << ": " << o.failure->error_text << "\n";
            if (o.failure->source_line)
                std::cout << "      line " << o.failure->source_line->number << ": " << o.failure->source_line->content
                          << "\n";
        }
    }
}

} // namespace

int describe_check(const Common& common, const DescribeCheckArgs& args) {
    const auto desc = load_problem_description(args.description);
    std::cout << "description: " << args.description.string() << "\n"
              << "sections: ok\n"
              << "examples: " << desc.examples.size() << "\n"
              << "training instances: " << desc.training_instances.size() << "\n";
    const auto kind = optional_problem(common, args.description);
    if (!kind) return 0;
    std::vector<std::string> problems;
    visit_problem(*kind, [&]<class P>(std::type_identity<P>) {
        auto check_instance = [&](const fs::path& path) {
            const auto text = read(path);
            const auto inst = P::parse_instance(text);
            if (P::write_instance(inst) != text::canonical_ending(text))
                problems.push_back(path.string() + ": rewrite differs from the file");
            return inst;
        };
        for (std::size_t i = 0; i < desc.examples.size(); ++i) {
            const auto& ex = desc.examples[i];
            const auto inst = check_instance(ex.instance_path);
            const auto sol_text = read(ex.solution_path);
            const auto sol = P::parse_solution(sol_text);
            if (P::write_solution(sol) != text::canonical_ending(sol_text))
                problems.push_back(ex.solution_path.string() + ": rewrite differs from the file");
            const auto feas = P::check(inst, sol);
            if (!feas.feasible) {
                problems.push_back("example " + std::to_string(i + 1) + ": infeasible: " + feas.diagnostic);
                continue;
            }
            const double f = static_cast<double>(P::evaluate(inst, sol));
            std::cout << "example " << i + 1 << ": objective " << number(f) << " (stated "
                      << number(ex.objective_value) << ")\n";
            if (f != ex.objective_value)
                problems.push_back("example " + std::to_string(i + 1) + ": objective " + number(f) + ", stated " +
                                   number(ex.objective_value));
        }
        for (const auto& t : desc.training_instances) (void)check_instance(t);
    });
    if (!problems.empty()) {
        std::string all;
        for (const auto& p : problems) all += (all.empty() ? "" : "; ") + p;
        throw CommandFailure("check", all);
    }
    std::cout << to_string(*kind) << " files: ok\n";
    return 0;
}

int generate(const Common& common, const GenerateArgs& args) {
    auto settings = load_settings(common.config);
    const auto backend_kind = args.backend.empty() ? settings.backend_kind : args.backend;
    std::unique_ptr<generator::LlmBackend> backend;
    if (backend_kind == "mock") {
        const auto script = args.script.empty() ? settings.mock_script : args.script;
        if (script.empty()) throw ConfigError("the mock backend needs --script");
        backend = std::make_unique<generator::MockBackend>(generator::MockBackend::from_script(script));
    } else if (backend_kind == "http") {
        auto http = settings.http;
        if (!args.endpoint.empty()) http.endpoint = args.endpoint;
        if (!args.model.empty()) http.model = args.model;
        if (args.temperature) http.temperature = args.temperature;
        backend = std::make_unique<generator::HttpBackend>(http);
    } else {
        throw ConfigError("unknown backend '" + backend_kind + "' (expected mock or http)");
    }

    auto options = settings.generate;
    options.seed = args.seed;
    options.training.seed = args.seed;
    if (args.validation_budget_ms) options.validation_budget_ms = *args.validation_budget_ms;
    if (args.training_budget_ms) options.training.budget = Budget::millis(*args.training_budget_ms);
    if (args.training_instances) options.training.max_instances = *args.training_instances;
    if (args.threads) options.training.threads = *args.threads;

    const auto desc = load_problem_description(args.description);
    const auto result = generator::generate_os(desc, *backend, generator::parse_generator_kind(args.kind), options);
    write(args.out / "attempts.jsonl", generator::attempts_to_jsonl(result.attempts));
    if (!result.ok()) throw CommandFailure("generation", result.failure);
    generator::save_generated_os(*result.os, args.out);
    std::cout << "generated " << generator::to_string(result.os->kind) << " system in " << args.out.string() << ": "
              << result.os->units.size() << " units, " << result.restarts_used << " generation attempt(s), "
              << result.prompts_sent << " prompts\n";
    return 0;
}

int train(const Common& common, const TrainArgs& args) {
    const auto desc = load_problem_description(args.description);
    const auto paths = instance_set(desc);
    if (paths.empty()) throw ConfigError("the description lists no training instances or examples");
    const auto labels = instance_ids(paths);
    TrainingPlan plan{args.max_instances, budget_of(args.budget_ms, args.iterations), args.seed, args.threads};
    visit_problem(require_problem(common, args.description), [&]<class P>(std::type_identity<P>) {
        std::vector<NativeBinding<P>> bindings;
        for (const auto& p : paths) bindings.emplace_back(P::parse_instance(read(p)));
        const auto pool = reference_pool<P>();
        const auto report = osgen::train(pool, bindings, labels, plan);
        write(args.out, write_configuration(report.winner()));
        if (!args.report.empty()) write(args.report, write_training_report(report));
        std::cout << "evaluated " << report.table.configs.size() << " configurations on "
                  << report.table.instance_labels.size() << " instances; winner #" << report.winner_index + 1 << ":";
        for (const auto& c : report.winner().components) std::cout << " " << c;
        std::cout << "\n";
    });
    return 0;
}

int solve(const Common& common, const SolveArgs& args) {
    const auto dir = os_dir(args.solver);
    if (!dir) {
        visit_problem(require_problem(common, args.description), [&]<class P>(std::type_identity<P>) {
            const NativeBinding<P> binding(P::parse_instance(read(args.instance)));
            const auto budget = budget_of(args.budget_ms, args.iterations);
            typename P::Solution best;
            if (args.configuration.empty()) {
                best = solve_reference(binding, budget, args.seed).best_solution;
            } else {
                const auto pool = reference_pool<P>();
                const auto config = parse_configuration(read(args.configuration));
                validate_configuration(config, pool.names());
                Rng rng(args.seed);
                best = run(config, pool, binding, budget, rng).best_solution;
            }
            const auto objective = P::objective(binding.instance(), best);
            write(args.out, P::write_solution(best));
            std::cout << objective << "\n";
        });
        return 0;
    }
    if (args.iterations) throw ConfigError("iteration budgets apply to the native solver only");
    if (!args.configuration.empty()) throw ConfigError("--configuration applies to the native solver only");
    const auto settings = load_settings(common.config);
    const auto os = generator::load_generated_os(*dir);
    auto session = generator::open_session(os, settings.generate.host);
    session->load_instance(args.instance);
    const auto solution = generator::solve_with(os, *session, args.budget_ms, args.seed);
    const auto feas = session->is_feasible(solution);
    if (!feas.feasible) throw CommandFailure("infeasible", "the system returned an infeasible solution: " + feas.diagnostic);
    if (args.out.has_parent_path()) fs::create_directories(args.out.parent_path());
    session->save_solution(solution, args.out);
    std::cout << number(session->objective(solution)) << "\n";
    return 0;
}

int validate(const Common& common, const ValidateArgs& args) {
    const auto desc = load_problem_description(args.description);
    if (desc.examples.empty()) throw ConfigError("the description has no examples to validate against");
    const auto dir = os_dir(args.solver);
    std::unique_ptr<OsSession> session;
    std::optional<generator::GeneratedOs> os;
    if (dir) {
        os = generator::load_generated_os(*dir);
        session = generator::open_session(*os, load_settings(common.config).generate.host);
    } else {
        session = make_native_session(require_problem(common, args.description));
    }

    validation::SuiteOptions options;
    options.budget_ms = args.budget_ms;
    options.seed = args.seed;
    if (os)
        options.producer = [&os](OsSession& s, double ms, std::uint64_t seed) {
            return generator::solve_with(*os, s, ms, seed);
        };
    std::vector<validation::ValidationReport> reports;
    reports.push_back(validation::dynamic_suite(*session, desc.examples, options));
    reports.back().unit = "system";

    session->load_instance(desc.examples.front().instance_path);
    for (const auto& m : session->mutation_names()) {
        validation::ValidationReport r{m, {}};
        auto failure = validation::mutation_check(*session, m, args.mutation_trials, args.seed);
        const auto name = failure ? failure->test_name : m + ".apply() failed or broke a problem constraint.";
        r.outcomes.push_back({name, failure ? validation::TestStatus::Failed : validation::TestStatus::Passed, failure});
        reports.push_back(std::move(r));
    }

    std::string jsonl;
    for (const auto& r : reports) {
        print_outcomes(r);
        jsonl += validation::to_jsonl(r);
    }
    if (!args.report.empty()) write(args.report, jsonl);
    for (const auto& r : reports)
        if (const auto* f = r.first_failure())
            throw CommandFailure("validation", r.unit + ": " + f->test_name + " " + f->error_text);
    return 0;
}

int bench(const Common& common, const BenchArgs& args) {
    const auto kind = require_problem(common, args.description);
    std::vector<fs::path> paths = args.instances;
    if (paths.empty()) paths = instance_set(load_problem_description(args.description));
    if (paths.empty()) throw ConfigError("no instances to benchmark");
    const auto ids = instance_ids(paths);
    const auto dir = os_dir(args.solver);

    bench::BenchPlan plan;
    plan.solver_id = args.solver;
    plan.problem = std::string(to_string(kind));
    plan.seeds = args.seeds;
    plan.threads = dir ? 1 : args.threads;
    if (args.iterations) {
        if (dir) throw ConfigError("iteration budgets apply to the native solver only");
        plan.budgets.push_back(Budget::of_iterations(*args.iterations));
    } else {
        for (double ms : args.budgets_ms) plan.budgets.push_back(Budget::millis(ms));
    }
    plan.notes = "best-known values are exact for AP and for TSP/GTSP up to " + std::to_string(bench::kExactCityLimit) +
                 " cities, best found otherwise";
    if (kind == ProblemKind::Etp) plan.notes += "; objectives shifted by +n_slots per instance before the gap";

    const auto table_path = args.best_known.empty() ? args.out_dir / "best_known.csv" : args.best_known;
    auto table = bench::BestKnownTable::load(table_path);

    std::optional<generator::GeneratedOs> os;
    std::unique_ptr<HostedSession> session;
    std::optional<std::size_t> loaded;
    if (dir) {
        os = generator::load_generated_os(*dir);
        session = generator::open_session(*os, load_settings(common.config).generate.host);
    }

    std::vector<bench::GapReport> reports;
    visit_problem(kind, [&]<class P>(std::type_identity<P>) {
        std::vector<NativeBinding<P>> bindings;
        std::vector<bench::BenchInstance> instances;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            bindings.emplace_back(P::parse_instance(read(paths[i])));
            const auto exact = bench::exact_best_known(bindings.back().instance());
            instances.push_back({ids[i], exact ? std::optional<double>(static_cast<double>(*exact)) : std::nullopt,
                                 bench::objective_shift(bindings.back().instance())});
        }
        bench::Solver solver;
        if (!dir) {
            solver = [&](std::size_t i, const Budget& b, std::uint64_t seed) {
                const auto r = solve_reference(bindings[i], b, seed);
                return static_cast<double>(P::objective(bindings[i].instance(), r.best_solution));
            };
        } else {
            solver = [&](std::size_t i, const Budget& b, std::uint64_t seed) {
                if (loaded != i) {
                    loaded.reset();
                    session->load_instance(paths[i]);
                    loaded = i;
                }
                const auto ms = std::chrono::duration<double, std::milli>(b.time).count();
                const auto text = generator::solve_with(*os, *session, ms, seed);
                // Judged by the built-in checker, independent of the system's own.
                const auto sol = P::parse_solution(text);
                return static_cast<double>(P::objective(bindings[i].instance(), sol));
            };
        }
        reports = bench::run_bench(instances, solver, plan, table);
    });

    fs::create_directories(args.out_dir);
    for (const auto& r : reports) {
        const auto path = args.out_dir / ("bench_" + bench::budget_label(r.budget) + ".csv");
        write(path, bench::to_csv(r));
        std::cout << bench::budget_label(r.budget) << ": gap " << (r.solved ? number(r.aggregate_gap) + "%" : "n/a")
                  << ", solved " << r.solved << "/" << r.records.size();
        if (const auto m = r.solved_marker(); !m.empty()) std::cout << " " << m;
        std::cout << " -> " << path.string() << "\n";
    }
    table.save(table_path);
    return 0;
}

int make_instances(const Common& common, const MakeInstancesArgs& args) {
    if (common.problem.empty()) throw ConfigError("make-instances needs --problem");
    const auto kind = parse_problem_kind(common.problem);
    std::vector<std::string> texts;
    Rng rng(args.seed);
    switch (kind) {
    case ProblemKind::Ap:
        for (const auto& i : generators::ap_instances(args.seed)) texts.push_back(Ap::write_instance(i));
        break;
    case ProblemKind::Etp:
        for (const auto& i : generators::etp_instances(args.seed)) texts.push_back(Etp::write_instance(i));
        break;
    case ProblemKind::Tsp:
        for (std::size_t k = 1; k <= 10; ++k) texts.push_back(Tsp::write_instance(generators::euclidean_tsp(10 * k, rng)));
        break;
    case ProblemKind::Gtsp:
        for (std::size_t k = 1; k <= 10; ++k) {
            const std::size_t n = 10 * k;
            texts.push_back(Gtsp::write_instance(generators::euclidean_gtsp(n, std::max<std::size_t>(3, n / 4), rng)));
        }
        break;
    }
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const auto path = args.out / ("instance" + std::to_string(i + 1) + ".txt");
        write(path, texts[i]);
        std::cout << path.string() << "\n";
    }
    return 0;
}

} // namespace osgen::cli
