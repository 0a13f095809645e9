// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osgen/description.hpp"
#include "osgen/generator/generated_os.hpp"
#include "osgen/generator/llm.hpp"
#include "osgen/trainer.hpp"

namespace osgen::generator {

struct GenerationPolicy {
    int instance_repairs = 2;
    int solution_repairs = 2;
    int algorithm_repairs = 4;
    int mutation_target = 2;
    int mutation_total_attempts = 10;
    int mutation_repairs_each = 2;
    /// Generation attempts from scratch before giving up.
    int os_restarts = 3;
    /// Retries of a failed backend exchange; not counted as attempts.
    int transport_retries = 3;
    std::size_t mutation_trials = validation::kDefaultMutationTrials;
};

/// Throws ConfigError unless every count is positive.
void validate_policy(const GenerationPolicy& policy);

struct GenerateOptions {
    GenerationPolicy policy;
    HostConfig host = HostConfig::from_environment();
    /// Budget of the run tested by the algorithm stage and final check.
    double validation_budget_ms = 1000;
    /// CMCS offline training; instances come from the description's
    /// training set, or its examples when it has none.
    TrainingPlan training;
    std::uint64_t seed = kDefaultSeed;
};

/// One backend response and its verdict.
struct AttemptRecord {
    int restart = 1;      // 1-based generation attempt
    std::string stage;    // instance, solution, algorithm, MyMutation<i>, training, final
    int attempt = 1;      // 1-based within the stage (per class for mutations)
    bool passed = false;
    std::string failure_kind;
    std::string summary;
};

/// One JSON object per record.
std::string attempts_to_jsonl(const std::vector<AttemptRecord>& log);

struct GenerationResult {
    std::optional<GeneratedOs> os;
    std::vector<AttemptRecord> attempts;
    int restarts_used = 0;
    /// Number of backend requests that returned a response.
    std::size_t prompts_sent = 0;
    std::string failure;

    [[nodiscard]] bool ok() const noexcept { return os.has_value(); }
};

/// Code of a response: fenced blocks concatenated in order, else the whole
/// response when `parses` accepts it and it defines a class.
std::optional<std::string> extract_code(std::string_view response,
                                        const std::function<bool(const std::string&)>& parses);

/// Follow-up user message for a failed test: the test, the error type and
/// text, and the offending line quoted verbatim.
std::string repair_prompt(const validation::ValidationFailure& failure);

/// Runs the staged generation conversation. Transport failures that persist
/// past the retry limit propagate as TransportError.
GenerationResult generate_os(const ProblemDescription& desc, LlmBackend& backend, GeneratorKind kind,
                             const GenerateOptions& options = {});

} // namespace osgen::generator
