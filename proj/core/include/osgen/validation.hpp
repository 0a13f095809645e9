// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osgen/description.hpp"
#include "osgen/host/hosted_session.hpp"
#include "osgen/rng.hpp"

namespace osgen::validation {

enum class FailureKind {
    NoCode,
    StaticError,
    MissingInterface,
    RuntimeError,
    InfeasibleSolution,
    Timeout,
    BadObjective,
    RoundTripMismatch,
    /// A mutation that never changed a solution (extension).
    NoOpMutation,
};

[[nodiscard]] std::string_view to_string(FailureKind kind) noexcept;

struct SourceLine {
    std::size_t number = 0; // 1-based
    std::string content;
};

struct ValidationFailure {
    std::string test_name;
    FailureKind kind = FailureKind::RuntimeError;
    std::string error_type;
    std::string error_text;
    std::optional<SourceLine> source_line;
    /// Unit the error was raised in, when known.
    std::string unit;
};

/// Converts the in-flight exception into a failure of `test_name`.
ValidationFailure failure_from_current_exception(const std::string& test_name);

enum class TestStatus { Passed, Failed, Skipped };
[[nodiscard]] std::string_view to_string(TestStatus status) noexcept;

struct TestOutcome {
    std::string test_name;
    TestStatus status = TestStatus::Skipped;
    std::optional<ValidationFailure> failure;
};

struct ValidationReport {
    std::string unit;
    std::vector<TestOutcome> outcomes;

    [[nodiscard]] bool passed() const noexcept;
    [[nodiscard]] const ValidationFailure* first_failure() const noexcept;
};

/// One JSON object per outcome: unit, test, status and the failure fields.
std::string to_jsonl(const ValidationReport& report);

// ---- static checks -------------------------------------------------------

enum class UnitKind { Instance, Solution, Algorithm, Mutation };

/// Class name a unit must define: MyInstance, MySolution, MyAlgorithm or
/// MyMutation<index>.
[[nodiscard]] std::string class_name(UnitKind kind, int mutation_index = 0);
/// Expected methods and arities (self included).
[[nodiscard]] std::vector<MethodSpec> expected_methods(UnitKind kind);

/// Parses the unit in the hosting interpreter and checks its interface.
/// Failures are returned, never thrown.
std::optional<ValidationFailure> static_check(HostedSession& checker, UnitKind kind, const std::string& source,
                                              int mutation_index = 0);

// ---- dynamic suite -------------------------------------------------------

inline constexpr std::string_view kTestReadInstance = "Failed to create an instance of MyInstance.";
inline constexpr std::string_view kTestReadSolution = "Failed to load a solution with MySolution.load_from_file().";
inline constexpr std::string_view kTestExampleFeasible =
    "MySolution.is_feasible() returned False for a feasible example solution.";
inline constexpr std::string_view kTestExampleObjective =
    "MySolution.get_objective() returned a wrong objective value for an example solution.";
inline constexpr std::string_view kTestRun = "MyAlgorithm.solve() failed or exceeded the time budget.";
inline constexpr std::string_view kTestProducedFeasible = "MyAlgorithm.solve() returned an infeasible solution.";
inline constexpr std::string_view kTestRoundTrip =
    "Failed to save a solution with MySolution.save_to_file() and load it back.";

/// Which of the seven tests run. Instance: test 1. Solution: tests 1-4, 6, 7
/// with a random solution standing in for the produced one. Algorithm: all.
enum class SuiteStage { Instance, Solution, Algorithm };

/// Produces a solution on the loaded instance within `budget_ms`.
using Producer = std::function<std::string(OsSession&, double budget_ms, std::uint64_t seed)>;

struct SuiteOptions {
    SuiteStage stage = SuiteStage::Algorithm;
    double budget_ms = 1000;
    std::uint64_t seed = kDefaultSeed;
    /// Defaults to the session's algorithm (or a random solution at the
    /// solution stage).
    Producer producer;
    /// Where produced solutions are written; a temporary directory if empty.
    std::filesystem::path scratch_dir;
};

/// Runs the applicable tests in order over every example; the first failure
/// ends the suite and the remaining tests are reported as skipped. Without
/// examples every test is skipped.
ValidationReport dynamic_suite(OsSession& session, const std::vector<ExampleCase>& examples,
                               const SuiteOptions& options = {});

inline constexpr std::size_t kDefaultMutationTrials = 100;

/// Applies `mutation` to `trials` fresh random solutions of the loaded
/// instance: all results must be feasible and at least one must differ
/// from its input.
std::optional<ValidationFailure> mutation_check(OsSession& session, const std::string& mutation,
                                                std::size_t trials = kDefaultMutationTrials,
                                                std::uint64_t seed = kDefaultSeed);

} // namespace osgen::validation
