// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any fails.
// Usage: osgen_acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/support.hpp"
#include "osgen/bench.hpp"
#include "osgen/description.hpp"
#include "osgen/exact.hpp"
#include "osgen/generator/generated_os.hpp"
#include "osgen/generator/orchestrator.hpp"
#include "osgen/problems/dispatch.hpp"
#include "osgen/problems/generators.hpp"
#include "osgen/reference_solver.hpp"
#include "osgen/trainer.hpp"
#include "osgen/validation.hpp"

using namespace osgen;
using namespace osgen::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        if (!detail.empty()) detail += "; ";
        detail += why;
        pass = false;
    }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

fs::path library(const std::string& rel) { return source_dir() / "library" / rel; }

std::vector<fs::path> training_paths(const std::string& problem) {
    return load_problem_description(library(problem + "/description.txt")).training_instances;
}

std::string fmt(double v, int digits = 3) {
    std::ostringstream s;
    s.precision(digits);
    s << std::fixed << v;
    return s.str();
}

// ---- independent oracles ----------------------------------------------------

std::int64_t brute_tsp(const tsp::Instance& inst) {
    const std::size_t n = inst.size();
    std::vector<int> tour(n);
    std::iota(tour.begin(), tour.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) c += inst.cost(tour[i], tour[(i + 1) % n]);
        best = std::min(best, c);
    } while (std::next_permutation(tour.begin() + 1, tour.end()));
    return best;
}

// Cluster orders with cluster 0 first, then every choice of one city per cluster.
std::int64_t brute_gtsp(const gtsp::Instance& inst) {
    const std::size_t m = inst.n_clusters();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        std::vector<std::size_t> pick(m, 0);
        while (true) {
            std::int64_t c = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const int a = inst.clusters[order[i]][pick[i]];
                const int b = inst.clusters[order[(i + 1) % m]][pick[(i + 1) % m]];
                c += inst.cost(a, b);
            }
            best = std::min(best, c);
            std::size_t k = 0;
            while (k < m && ++pick[k] == inst.clusters[order[k]].size()) pick[k++] = 0;
            if (k == m) break;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

std::int64_t brute_ap(const ap::Instance& inst) {
    std::vector<int> perm(inst.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) c += inst.cost(i, perm[i]);
        best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

tsp::Instance asymmetric_tsp(std::size_t n, Rng& rng) {
    tsp::Instance inst{CostMatrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inst.cost.at(i, j) = i == j ? 0 : rng.uniform_int(1, 100);
    return inst;
}

// Reachability over the union of both matrices, computed by transitive closure.
bool strongly_connected(const CmcsConfiguration& c) {
    const std::size_t k = c.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) reach[i][j] = c.success[i][j] > 0 || c.fail[i][j] > 0;
    for (std::size_t via = 0; via < k; ++via)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) reach[i][j] = reach[i][j] || (reach[i][via] && reach[via][j]);
    for (std::size_t j = 0; j < k; ++j)
        if (!reach[0][j] || !reach[j][0]) return false;
    return true;
}

// ---- criteria -----------------------------------------------------------------

Verdict ac1_oracle_equivalence() {
    Verdict v;
    Rng rng(101);
    std::size_t checked = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 3 + rng.index(6);
        const auto inst = i % 2 ? generators::euclidean_tsp(n, rng) : asymmetric_tsp(n, rng);
        const auto opt = exact::solve_tsp(inst);
        const auto brute = brute_tsp(inst);
        if (opt.objective != brute || Tsp::objective(inst, opt.solution) != opt.objective)
            v.fail("TSP #" + std::to_string(i) + ": oracle " + std::to_string(opt.objective) + ", brute force " +
                   std::to_string(brute));
        ++checked;
    }
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 3 + rng.index(6);
        const std::size_t m = 2 + rng.index(n - 1);
        const auto inst = generators::euclidean_gtsp(n, m, rng);
        const auto opt = exact::solve_gtsp(inst);
        const auto brute = brute_gtsp(inst);
        if (opt.objective != brute || Gtsp::objective(inst, opt.solution) != opt.objective)
            v.fail("GTSP #" + std::to_string(i) + ": oracle " + std::to_string(opt.objective) + ", brute force " +
                   std::to_string(brute));
        ++checked;
    }
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + rng.index(8);
        const auto inst = generators::uniform_ap(n, 99, rng);
        const auto opt = exact::solve_ap(inst).optimum;
        const auto brute = brute_ap(inst);
        if (opt.objective != brute || Ap::objective(inst, opt.solution) != opt.objective)
            v.fail("AP #" + std::to_string(i) + ": oracle " + std::to_string(opt.objective) + ", brute force " +
                   std::to_string(brute));
        ++checked;
    }
    if (v.pass) v.detail = std::to_string(checked) + " instances, oracle = brute force = objective()";
    return v;
}

Verdict ac2_ap_gap() {
    Verdict v;
    std::vector<bench::BenchInstance> instances;
    std::vector<ap::Instance> data;
    for (const auto& p : training_paths("ap")) data.push_back(Ap::parse_instance(slurp(p)));
    if (data.size() != 10) v.fail("expected 10 AP instances, found " + std::to_string(data.size()));
    std::vector<exact::ApCertificate> certs;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].size() != 10 * (i + 1)) v.fail("instance " + std::to_string(i + 1) + " has the wrong size");
        certs.push_back(exact::solve_ap(data[i]));
        if (!exact::verify_ap_certificate(data[i], certs.back()))
            v.fail("dual certificate rejected on instance " + std::to_string(i + 1));
        const auto b = bench::exact_best_known(data[i]);
        instances.push_back({"ap" + std::to_string(i + 1), static_cast<double>(*b), 0});
    }
    if (!data.empty() && brute_ap(data[0]) != certs[0].optimum.objective) v.fail("n=10 optimum differs from brute force");

    bench::Solver exact_solver = [&](std::size_t i, const Budget&, std::uint64_t) {
        return static_cast<double>(Ap::objective(data[i], certs[i].optimum.solution));
    };
    bench::BenchPlan plan{"exact-ap", "ap", {Budget::millis(100)}, {1}, 1, ""};
    bench::BestKnownTable table;
    const auto report = bench::run_bench(instances, exact_solver, plan, table).at(0);
    if (report.solved != report.records.size()) v.fail("unsolved runs");
    const std::string shown = fmt(report.aggregate_gap, 1) + "%";
    if (report.aggregate_gap != 0.0) v.fail("gap " + shown);
    if (v.pass) v.detail = "sizes 10-100, certified optima, gap " + shown;
    return v;
}

template <Problem P>
void feasibility_sweep(const typename P::Instance& inst, std::size_t applications, Verdict& v, std::size_t& total,
                       std::uint64_t seed) {
    const NativeBinding<P> binding(inst);
    const auto pool = reference_pool<P>();
    Rng rng(seed);
    for (const auto& component : pool) {
        std::size_t bad = 0;
        std::string first;
        for (std::size_t a = 0; a < applications; ++a) {
            auto s = binding.random_solution(rng);
            component.apply(s, binding, rng, Deadline::never());
            const auto f = binding.check(s);
            if (!f.feasible && bad++ == 0) first = f.diagnostic;
        }
        total += applications;
        if (bad)
            v.fail(std::string(P::name) + " " + component.name + ": " + std::to_string(bad) + " infeasible (" + first +
                   ")");
    }
}

Verdict ac3_feasibility() {
    Verdict v;
    constexpr std::size_t kApplications = 10000;
    std::size_t total = 0;
    Rng rng(303);
    feasibility_sweep<Tsp>(generators::euclidean_tsp(30, rng), kApplications, v, total, 1);
    feasibility_sweep<Gtsp>(generators::euclidean_gtsp(30, 8, rng), kApplications, v, total, 2);
    feasibility_sweep<Ap>(generators::uniform_ap(30, 99, rng), kApplications, v, total, 3);
    feasibility_sweep<Etp>(generators::etp_instances(1).at(4), kApplications, v, total, 4);
    if (v.pass) v.detail = std::to_string(total) + " applications over 4 x 11 components, all feasible";
    return v;
}

template <Problem P>
void monotone_runs(const std::string& problem, std::size_t runs, double budget_ms, Verdict& v, std::size_t& done,
                   double& worst_overrun_ms) {
    std::vector<NativeBinding<P>> bindings;
    for (const auto& p : training_paths(problem)) bindings.emplace_back(P::parse_instance(slurp(p)));
    const auto pool = reference_pool<P>();
    auto configs = enumerate_deterministic_configs(pool);
    configs.insert(configs.begin(), reference_configuration<P>());
    const double limit = algorithm_grace_limit_ms(budget_ms);
    RunOptions opts;
    opts.record_objective_trace = true;
    for (std::size_t r = 0; r < runs; ++r) {
        const auto& b = bindings[r % bindings.size()];
        // Alternate the reference configuration with enumerated ones.
        const auto& config = r % 2 == 0 ? configs[0] : configs[1 + (r * 37) % (configs.size() - 1)];
        Rng rng(derive_seed(404, r, 0));
        const auto start = Clock::now();
        const auto res = run(config, pool, b, Budget::millis(budget_ms), rng, opts);
        const double wall = seconds_since(start) * 1000.0;
        worst_overrun_ms = std::max(worst_overrun_ms, wall - budget_ms);
        const auto tag = problem + " run " + std::to_string(r);
        if (wall > limit) v.fail(tag + ": " + fmt(wall, 1) + " ms exceeds " + fmt(limit, 1) + " ms");
        for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
            if (res.objective_trace[i].second > res.objective_trace[i - 1].second) {
                v.fail(tag + ": best-objective trace increases at iteration " +
                       std::to_string(res.objective_trace[i].first));
                break;
            }
        if (res.objective_trace.empty() || res.objective_trace.back().second != res.best_objective)
            v.fail(tag + ": trace does not end at the best objective");
        if (!b.check(res.best_solution).feasible || b.objective(res.best_solution) != res.best_objective)
            v.fail(tag + ": best solution does not match its objective");
        ++done;
    }
}

Verdict ac4_monotone_budget() {
    Verdict v;
    std::size_t done = 0;
    double worst = -std::numeric_limits<double>::infinity();
    monotone_runs<Tsp>("tsp", 250, 100, v, done, worst);
    monotone_runs<Gtsp>("gtsp", 250, 100, v, done, worst);
    monotone_runs<Ap>("ap", 250, 100, v, done, worst);
    monotone_runs<Etp>("etp", 250, 100, v, done, worst);
    if (v.pass)
        v.detail = std::to_string(done) + " runs at 100 ms, traces nonincreasing, worst overrun " + fmt(worst, 2) +
                   " ms (limit " + fmt(algorithm_grace_limit_ms(100) - 100, 0) + " ms)";
    return v;
}

Verdict ac5_enumeration() {
    Verdict v;
    const auto names = reference_pool<Tsp>().names();
    if (names.size() != 11) v.fail("pool has " + std::to_string(names.size()) + " components");
    const auto configs = enumerate_deterministic_configs(names);
    std::set<std::string> seen;
    for (const auto& c : configs) {
        if (!seen.insert(write_configuration(c)).second) v.fail("duplicate configuration");
        if (!c.deterministic()) v.fail("non-deterministic configuration");
        if (!strongly_connected(c)) v.fail("configuration over " + c.components[0] + ", " + c.components[1] +
                                           " fails the reachability property");
    }
    // Complete: every strongly connected one-hot pair configuration is emitted.
    std::size_t expected = 0;
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b)
            for (int bits = 0; bits < 16; ++bits) {
                auto row = [](int t) { return t ? std::vector<double>{0, 1} : std::vector<double>{1, 0}; };
                CmcsConfiguration c{{names[a], names[b]},
                                    {row(bits & 1), row(bits & 2)},
                                    {row(bits & 4), row(bits & 8)}};
                if (strongly_connected(c)) ++expected;
            }
    if (configs.size() != expected)
        v.fail(std::to_string(configs.size()) + " emitted, " + std::to_string(expected) + " meaningful");
    if (configs.size() < 150 || configs.size() > 600)
        v.fail("count " + std::to_string(configs.size()) + " outside [150, 600]");
    if (v.pass) v.detail = std::to_string(configs.size()) + " meaningful configurations, duplicate-free and sound";
    return v;
}

Verdict ac6_selection() {
    Verdict v;
    std::vector<NativeBinding<Ap>> bindings;
    std::vector<std::string> labels;
    for (const auto& p : training_paths("ap")) {
        bindings.emplace_back(Ap::parse_instance(slurp(p)));
        labels.push_back(p.stem().string());
    }
    const auto pool = reference_pool<Ap>();
    TrainingPlan plan{5, Budget::millis(100), 606, 1};
    const auto report = train(pool, bindings, labels, plan);
    const auto& obj = report.table.objectives;
    std::vector<double> means;
    for (const auto& row : obj) {
        double sum = 0;
        for (double x : row) sum += x;
        means.push_back(sum / static_cast<double>(row.size()));
    }
    const double winner = means[report.winner_index];
    auto sorted = means;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
    if (!(winner <= median)) v.fail("winner mean " + fmt(winner) + " > median " + fmt(median));

    TrainingPlan iter_plan{5, Budget::of_iterations(20), 606, 1};
    const auto a = write_training_report(train(pool, bindings, labels, iter_plan));
    const auto b = write_training_report(train(pool, bindings, labels, iter_plan));
    if (a != b) v.fail("iteration-budget table differs between two runs");
    if (v.pass)
        v.detail = std::to_string(n) + " configurations x 5 instances at 100 ms; winner mean " + fmt(winner, 1) +
                   " <= median " + fmt(median, 1) + "; iteration table bit-identical";
    return v;
}

Verdict ac7_budget_trend() {
    Verdict v;
    Rng rng(707);
    std::vector<NativeBinding<Tsp>> bindings;
    std::vector<bench::BenchInstance> instances;
    for (std::size_t n : {20, 35, 50}) {
        bindings.emplace_back(generators::euclidean_tsp(n, rng));
        instances.push_back({"tsp" + std::to_string(n), std::nullopt, 0});
    }
    bench::Solver solver = [&](std::size_t i, const Budget& b, std::uint64_t seed) {
        return solve_reference(bindings[i], b, seed).best_objective;
    };
    bench::BenchPlan plan{"reference", "tsp", {Budget::millis(100), Budget::millis(1000), Budget::millis(10000)},
                          {1, 2, 3, 4, 5}, 1, ""};
    bench::BestKnownTable table;
    const auto reports = bench::run_bench(instances, solver, plan, table);
    const double g01 = reports[0].aggregate_gap, g1 = reports[1].aggregate_gap, g10 = reports[2].aggregate_gap;
    for (const auto& r : reports)
        if (r.solved != r.records.size()) v.fail("unsolved runs at " + bench::budget_label(r.budget));
    if (!(g10 <= g01)) v.fail("gap at 10 s (" + fmt(g10) + "%) above gap at 0.1 s (" + fmt(g01) + "%)");
    if (g01 >= 1.0 && !(g10 <= 0.8 * g01))
        v.fail("gap at 10 s (" + fmt(g10) + "%) not 20% below gap at 0.1 s (" + fmt(g01) + "%)");
    const std::string shape = "gaps 0.1/1/10 s: " + fmt(g01) + "% / " + fmt(g1) + "% / " + fmt(g10) + "%";
    if (v.pass) v.detail = shape + " over n = 20, 35, 50 x 5 seeds";
    else v.detail += " (" + shape + ")";
    return v;
}

struct Generated {
    bool ok = false;
    std::string error;
    fs::path dir;
    std::vector<nlohmann::json> attempts;
};

Generated generate_with(const std::string& script, const fs::path& out) {
    Generated g;
    g.dir = out;
    const auto desc_path = library("tsp/description.txt");
#ifdef OSGEN_CLI
    const auto r = run_command(quote(fs::path(OSGEN_CLI)) + " generate " + quote(desc_path) +
                               " --kind CMCS --backend mock --script " + quote(fixture("mock/" + script)) + " --out " +
                               quote(out) + " --training-budget-ms 2 --training-instances 2 --validation-budget-ms 300");
    g.ok = r.exit_code == 0;
    g.error = r.err;
    std::istringstream lines(slurp(out / "attempts.jsonl"));
    for (std::string line; std::getline(lines, line);)
        if (!line.empty()) g.attempts.push_back(nlohmann::json::parse(line));
#else
    auto backend = generator::MockBackend::from_script(fixture("mock/" + script));
    generator::GenerateOptions options;
    options.validation_budget_ms = 300;
    options.training.budget = Budget::millis(2);
    options.training.max_instances = 2;
    const auto result = generator::generate_os(load_problem_description(desc_path), backend,
                                               generator::GeneratorKind::CMCS, options);
    g.ok = result.ok();
    g.error = result.failure;
    if (g.ok) generator::save_generated_os(*result.os, out);
    std::istringstream lines(generator::attempts_to_jsonl(result.attempts));
    for (std::string line; std::getline(lines, line);)
        if (!line.empty()) g.attempts.push_back(nlohmann::json::parse(line));
#endif
    return g;
}

Verdict ac8_end_to_end() {
    Verdict v;
    ScratchDir scratch("acceptance-e2e");
    const auto desc = load_problem_description(library("tsp/description.txt"));

    const auto clean = generate_with("cmcs_clean.json", scratch.path / "clean");
    if (!clean.ok) {
        v.fail("clean script failed: " + clean.error);
    } else {
        const auto os = generator::load_generated_os(clean.dir);
        auto session = generator::open_session(os, HostConfig::from_environment());
        validation::SuiteOptions opts;
        opts.budget_ms = 300;
        opts.producer = [&os](OsSession& s, double ms, std::uint64_t seed) {
            return generator::solve_with(os, s, ms, seed);
        };
        const auto report = validation::dynamic_suite(*session, desc.examples, opts);
        std::size_t passed = 0;
        for (const auto& o : report.outcomes) passed += o.status == validation::TestStatus::Passed;
        if (report.outcomes.size() != 7 || passed != 7)
            v.fail("generated system passed " + std::to_string(passed) + " of 7 dynamic tests");
    }

    const auto repair = generate_with("cmcs_repair.json", scratch.path / "repair");
    std::size_t repaired = 0;
    for (std::size_t i = 0; i + 1 < repair.attempts.size(); ++i) {
        const auto& a = repair.attempts[i];
        const auto& next = repair.attempts[i + 1];
        if (a["outcome"] == "failed" && next["outcome"] == "passed" && next["stage"] == a["stage"] &&
            next["attempt"] == a["attempt"].get<int>() + 1)
            ++repaired;
    }
    if (!repair.ok) v.fail("repair script failed: " + repair.error);
    if (repaired != 2) v.fail("repair script: " + std::to_string(repaired) + " repaired faults, expected 2");
    for (const auto& a : repair.attempts)
        if (a["restart"] != 1) v.fail("repair script restarted");

    const auto exhaust = generate_with("cmcs_exhaust.json", scratch.path / "exhaust");
    if (exhaust.ok) v.fail("exhausting script succeeded");
    std::map<int, int> per_restart;
    for (const auto& a : exhaust.attempts) {
        if (a["outcome"] != "failed" || !a.contains("failure_kind") || !a.contains("summary"))
            v.fail("incomplete attempt record: " + a.dump());
        ++per_restart[a["restart"].get<int>()];
    }
    // Each restart: the instance stage's first answer plus its two repairs.
    const std::map<int, int> expected{{1, 3}, {2, 3}, {3, 3}};
    if (per_restart != expected) v.fail("exhausting script: attempt log does not show exactly 3 restarts of 3 attempts");

    if (v.pass)
        v.detail = "clean system passes 7/7 on the TSP toy; 2 faults repaired; exhaustion after 3 restarts (" +
                   std::to_string(exhaust.attempts.size()) + " logged attempts)";
    return v;
}

Verdict ac9_round_trip() {
    Verdict v;
    std::size_t files = 0, examples = 0;
    for (const auto problem : {"tsp", "gtsp", "ap", "etp"}) {
        const auto desc_path = library(std::string(problem) + "/description.txt");
        const auto desc = load_problem_description(desc_path);
        visit_problem(parse_problem_kind(problem), [&]<class P>(std::type_identity<P>) {
            auto instance = [&](const fs::path& p) {
                const auto text = slurp(p);
                auto inst = P::parse_instance(text);
                if (P::write_instance(inst) != text::canonical_ending(text)) v.fail(p.string() + " does not round-trip");
                ++files;
                return inst;
            };
            for (const auto& t : desc.training_instances) (void)instance(t);
            for (const auto& ex : desc.examples) {
                const auto inst = instance(ex.instance_path);
                const auto text = slurp(ex.solution_path);
                const auto sol = P::parse_solution(text);
                if (P::write_solution(sol) != text::canonical_ending(text))
                    v.fail(ex.solution_path.string() + " does not round-trip");
                ++files;
                const auto f = static_cast<double>(P::objective(inst, sol));
                if (f != ex.objective_value)
                    v.fail(std::string(problem) + " example objective " + std::to_string(f) + ", stated " +
                           std::to_string(ex.objective_value));
                ++examples;
            }
        });
        const auto again = parse_problem_description(write_problem_description(desc, desc_path.parent_path()),
                                                     desc_path.parent_path());
        if (again.instance_file_format != desc.instance_file_format || again.examples.size() != desc.examples.size())
            v.fail(std::string(problem) + " description does not round-trip");
    }
    if (v.pass)
        v.detail = std::to_string(files) + " files byte-identical after rewrite, " + std::to_string(examples) +
                   " example objectives exact";
    return v;
}

Verdict ac10_etp_value() {
    Verdict v;
    const auto x = etp::min_slot_distance({3, 9, 7});
    if (x != 2) v.fail("x_s = " + std::to_string(x));
    const auto inst = Etp::parse_instance("3\n10\n1\n1 2 3\n");
    const auto obj = Etp::objective(inst, Etp::parse_solution("3 9 7\n"));
    if (obj != -2) v.fail("objective " + std::to_string(obj) + ", expected -2");
    if (v.pass) v.detail = "slots 3, 9, 7 give x_s = 2 and objective -2";
    return v;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Verdict()> check;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", ac1_oracle_equivalence},
        {2, "AP optimality gap", ac2_ap_gap},
        {3, "feasibility suite", ac3_feasibility},
        {4, "CMCS monotonicity and budget", ac4_monotone_budget},
        {5, "trainer enumeration", ac5_enumeration},
        {6, "trainer selection sanity", ac6_selection},
        {7, "budget trend", ac7_budget_trend},
        {8, "end-to-end generation with mock backend", ac8_end_to_end},
        {9, "round-trip and format exactness", ac9_round_trip},
        {10, "ETP slot distance", ac10_etp_value},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.number)) continue;
        const auto start = Clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::cout << "AC" << c.number << (c.number < 10 ? "  " : " ") << (v.pass ? "PASS" : "FAIL") << "  " << c.title
                  << ": " << v.detail << " [" << fmt(seconds_since(start), 1) << " s]" << std::endl;
    }
    return failed ? 1 : 0;
}
