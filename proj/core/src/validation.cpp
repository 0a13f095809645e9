// SPDX-License-Identifier: Apache-2.0
#include "osgen/validation.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "osgen/error.hpp"

namespace osgen::validation {

namespace fs = std::filesystem;

std::string_view to_string(FailureKind kind) noexcept {
    switch (kind) {
    case FailureKind::NoCode: return "no-code";
    case FailureKind::StaticError: return "static-error";
    case FailureKind::MissingInterface: return "missing-interface";
    case FailureKind::RuntimeError: return "runtime-error";
    case FailureKind::InfeasibleSolution: return "infeasible-solution";
    case FailureKind::Timeout: return "timeout";
    case FailureKind::BadObjective: return "bad-objective";
    case FailureKind::RoundTripMismatch: return "round-trip-mismatch";
    case FailureKind::NoOpMutation: return "no-op-mutation";
    }
    return "unknown";
}

std::string_view to_string(TestStatus status) noexcept {
    switch (status) {
    case TestStatus::Passed: return "passed";
    case TestStatus::Failed: return "failed";
    case TestStatus::Skipped: return "skipped";
    }
    return "unknown";
}

ValidationFailure failure_from_current_exception(const std::string& test_name) {
    ValidationFailure f;
    f.test_name = test_name;
    try {
        throw;
    } catch (const UnitError& e) {
        f.kind = e.type() == "BadObjective" ? FailureKind::BadObjective
                 : e.type() == "MissingInterface" ? FailureKind::MissingInterface
                 : e.type() == "SyntaxError" || e.type() == "IndentationError" ? FailureKind::StaticError
                                                                               : FailureKind::RuntimeError;
        f.error_type = e.type();
        f.error_text = e.message();
        f.unit = e.unit();
        if (e.line() > 0) f.source_line = SourceLine{e.line(), e.source_line()};
    } catch (const HostTimeout& e) {
        f.kind = FailureKind::Timeout;
        f.error_type = "Timeout";
        f.error_text = e.what();
    } catch (const ParseError& e) {
        f.kind = FailureKind::RuntimeError;
        f.error_type = "ParseError";
        f.error_text = e.what();
    } catch (const Error& e) {
        f.kind = FailureKind::RuntimeError;
        f.error_type = e.category();
        f.error_text = e.what();
    } catch (const std::exception& e) {
        f.kind = FailureKind::RuntimeError;
        f.error_type = "exception";
        f.error_text = e.what();
    }
    return f;
}

bool ValidationReport::passed() const noexcept {
    for (const auto& o : outcomes)
        if (o.status == TestStatus::Failed) return false;
    return true;
}

const ValidationFailure* ValidationReport::first_failure() const noexcept {
    for (const auto& o : outcomes)
        if (o.failure) return &*o.failure;
    return nullptr;
}

std::string to_jsonl(const ValidationReport& report) {
    std::string out;
    for (const auto& o : report.outcomes) {
        nlohmann::json j{{"unit", report.unit}, {"test", o.test_name}, {"status", to_string(o.status)}};
        if (o.failure) {
            j["kind"] = to_string(o.failure->kind);
            j["error_type"] = o.failure->error_type;
            j["error_text"] = o.failure->error_text;
            if (o.failure->source_line) {
                j["line"] = o.failure->source_line->number;
                j["source_line"] = o.failure->source_line->content;
            }
        }
        out += j.dump() + "\n";
    }
    return out;
}

std::string class_name(UnitKind kind, int mutation_index) {
    switch (kind) {
    case UnitKind::Instance: return "MyInstance";
    case UnitKind::Solution: return "MySolution";
    case UnitKind::Algorithm: return "MyAlgorithm";
    case UnitKind::Mutation: return "MyMutation" + std::to_string(mutation_index);
    }
    return {};
}

std::vector<MethodSpec> expected_methods(UnitKind kind) {
    switch (kind) {
    case UnitKind::Instance: return {{"__init__", 2}};
    case UnitKind::Solution:
        return {{"__init__", 2}, {"is_feasible", 1}, {"get_objective", 1}, {"save_to_file", 2}, {"load_from_file", 2}};
    case UnitKind::Algorithm: return {{"solve", 3}};
    case UnitKind::Mutation: return {{"apply", 2}};
    }
    return {};
}

std::optional<ValidationFailure> static_check(HostedSession& checker, UnitKind kind, const std::string& source,
                                              int mutation_index) {
    const auto cls = class_name(kind, mutation_index);
    const std::string test = "Compiling " + cls + " and checking its methods.";
    StaticCheckResult r;
    try {
        r = checker.static_check(source, cls, expected_methods(kind));
    } catch (...) {
        return failure_from_current_exception(test);
    }
    if (r.passed) return std::nullopt;
    ValidationFailure f;
    f.test_name = test;
    f.kind = r.kind == "missing-interface" ? FailureKind::MissingInterface : FailureKind::StaticError;
    f.error_type = r.error_type;
    f.error_text = r.message;
    if (r.line > 0) f.source_line = SourceLine{r.line, r.source_line};
    return f;
}

namespace {

struct ScratchGuard {
    fs::path path;
    bool owned = false;
    explicit ScratchGuard(const fs::path& given) {
        if (!given.empty()) {
            path = given;
            fs::create_directories(path);
            return;
        }
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("osgen-validate-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path);
        owned = true;
    }
    ~ScratchGuard() {
        if (!owned) return;
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string format_objective(double v) {
    if (std::abs(v) < 9.0e15 && v == std::floor(v)) return std::to_string(static_cast<long long>(v));
    return std::to_string(v);
}

ValidationFailure plain_failure(std::string_view test, FailureKind kind, std::string type, std::string text) {
    ValidationFailure f;
    f.test_name = std::string(test);
    f.kind = kind;
    f.error_type = std::move(type);
    f.error_text = std::move(text);
    return f;
}

} // namespace

ValidationReport dynamic_suite(OsSession& session, const std::vector<ExampleCase>& examples,
                               const SuiteOptions& options) {
    const std::vector<std::string_view> all{kTestReadInstance,     kTestReadSolution, kTestExampleFeasible,
                                            kTestExampleObjective, kTestRun,          kTestProducedFeasible,
                                            kTestRoundTrip};
    std::vector<bool> enabled(7, true);
    if (options.stage == SuiteStage::Instance) {
        enabled.assign(7, false);
        enabled[0] = true;
    }
    if (options.stage == SuiteStage::Solution) enabled[4] = false;

    ValidationReport report;
    report.unit = options.stage == SuiteStage::Instance   ? "MyInstance"
                  : options.stage == SuiteStage::Solution ? "MySolution"
                                                          : "MyAlgorithm";
    for (std::size_t t = 0; t < all.size(); ++t)
        if (enabled[t]) report.outcomes.push_back({std::string(all[t]), TestStatus::Skipped, std::nullopt});
    if (examples.empty()) return report;

    Producer producer = options.producer;
    if (!producer) {
        if (options.stage == SuiteStage::Algorithm) {
            producer = [](OsSession& s, double budget, std::uint64_t seed) {
                return s.run_algorithm(budget, seed).solution;
            };
        } else {
            producer = [](OsSession& s, double, std::uint64_t seed) { return s.random_solution(seed); };
        }
    }
    ScratchGuard scratch(options.scratch_dir);

    auto outcome = [&](std::string_view name) -> TestOutcome& {
        for (auto& o : report.outcomes)
            if (o.test_name == name) return o;
        throw std::logic_error("unknown test");
    };
    auto on = [&](std::size_t t) { return enabled[t]; };

    // Each test runs over all examples before the next test starts.
    std::vector<std::string> example_solutions(examples.size());
    std::vector<std::string> produced(examples.size());
    auto run_test = [&](std::size_t t, auto&& body) -> bool {
        if (!on(t)) return true;
        auto& o = outcome(all[t]);
        for (std::size_t e = 0; e < examples.size(); ++e) {
            std::optional<ValidationFailure> failure;
            try {
                failure = body(e);
            } catch (...) {
                failure = failure_from_current_exception(o.test_name);
            }
            if (failure) {
                o.status = TestStatus::Failed;
                o.failure = std::move(failure);
                return false;
            }
        }
        o.status = TestStatus::Passed;
        return true;
    };
    using Result = std::optional<ValidationFailure>;

    const bool ok =
        run_test(0,
                 [&](std::size_t e) -> Result {
                     session.load_instance(examples[e].instance_path);
                     return std::nullopt;
                 }) &&
        run_test(1,
                 [&](std::size_t e) -> Result {
                     session.load_instance(examples[e].instance_path);
                     example_solutions[e] = session.load_solution(examples[e].solution_path);
                     return std::nullopt;
                 }) &&
        run_test(2,
                 [&](std::size_t e) -> Result {
                     session.load_instance(examples[e].instance_path);
                     const auto f = session.is_feasible(example_solutions[e]);
                     if (f.feasible) return std::nullopt;
                     return plain_failure(kTestExampleFeasible, FailureKind::InfeasibleSolution, "Infeasible",
                                          "is_feasible() returned False for " + examples[e].solution_path.string() +
                                              (f.diagnostic.empty() ? "" : "; it printed: " + f.diagnostic));
                 }) &&
        run_test(3,
                 [&](std::size_t e) -> Result {
                     session.load_instance(examples[e].instance_path);
                     const double got = session.objective(example_solutions[e]);
                     if (got == examples[e].objective_value) return std::nullopt;
                     return plain_failure(kTestExampleObjective, FailureKind::BadObjective, "WrongObjective",
                                          "get_objective() returned " + format_objective(got) + " for " +
                                              examples[e].solution_path.string() + ", expected " +
                                              format_objective(examples[e].objective_value));
                 });
    if (!ok || !(on(4) || on(5) || on(6))) return report;

    // Tests 5-7 per example: produce, check feasibility, round-trip.
    auto produce = [&](std::size_t e) -> Result {
        session.load_instance(examples[e].instance_path);
        const auto seed = derive_seed(options.seed, e);
        const auto t0 = std::chrono::steady_clock::now();
        produced[e] = producer(session, options.budget_ms, seed);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (on(4) && ms > algorithm_grace_limit_ms(options.budget_ms))
            return plain_failure(kTestRun, FailureKind::Timeout, "Timeout",
                                 "solve() took " + std::to_string(static_cast<long long>(ms)) +
                                     " ms but the time budget is " +
                                     std::to_string(static_cast<long long>(options.budget_ms)) + " ms");
        return std::nullopt;
    };
    if (on(4)) {
        if (!run_test(4, produce)) return report;
    } else {
        // Solution stage: the producer is not under test; its errors are
        // attributed to the feasibility test of the produced solution.
        for (std::size_t e = 0; e < examples.size(); ++e) {
            try {
                (void)produce(e);
            } catch (...) {
                auto& o = outcome(kTestProducedFeasible);
                o.status = TestStatus::Failed;
                o.failure = failure_from_current_exception(o.test_name);
                return report;
            }
        }
    }
    const bool tail_ok =
        run_test(5,
                 [&](std::size_t e) -> Result {
                     session.load_instance(examples[e].instance_path);
                     const auto f = session.is_feasible(produced[e]);
                     if (f.feasible) return std::nullopt;
                     return plain_failure(kTestProducedFeasible, FailureKind::InfeasibleSolution, "Infeasible",
                                          "is_feasible() returned False for the produced solution" +
                                              (f.diagnostic.empty() ? std::string() : "; it printed: " + f.diagnostic));
                 }) &&
        run_test(6, [&](std::size_t e) -> Result {
            session.load_instance(examples[e].instance_path);
            const auto path = scratch.path / ("produced-" + std::to_string(e + 1) + ".txt");
            const double before = session.objective(produced[e]);
            session.save_solution(produced[e], path);
            const auto reloaded = session.load_solution(path);
            const double after = session.objective(reloaded);
            if (before == after) return std::nullopt;
            return plain_failure(kTestRoundTrip, FailureKind::RoundTripMismatch, "RoundTripMismatch",
                                 "objective was " + format_objective(before) + " before save_to_file() and " +
                                     format_objective(after) + " after load_from_file()");
        });
    (void)tail_ok;
    return report;
}

std::optional<ValidationFailure> mutation_check(OsSession& session, const std::string& mutation, std::size_t trials,
                                                std::uint64_t seed) {
    const std::string test = mutation + ".apply() failed or broke a problem constraint.";
    std::size_t changed = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        try {
            const auto before = session.random_solution(derive_seed(seed, t, 0));
            const auto after = session.apply_mutation(mutation, before, derive_seed(seed, t, 1));
            const auto f = session.is_feasible(after);
            if (!f.feasible)
                return plain_failure(test, FailureKind::InfeasibleSolution, "Infeasible",
                                     "trial " + std::to_string(t + 1) + ": the mutated solution is infeasible" +
                                         (f.diagnostic.empty() ? std::string() : "; is_feasible() printed: " + f.diagnostic));
            if (after != before) ++changed;
        } catch (...) {
            return failure_from_current_exception(test);
        }
    }
    if (trials > 0 && changed == 0)
        return plain_failure(test, FailureKind::NoOpMutation, "NoOpMutation",
                             "mutation never changed the solution in " + std::to_string(trials) + " trials");
    return std::nullopt;
}

} // namespace osgen::validation
