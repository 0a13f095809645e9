// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osgen/components.hpp"
#include "osgen/error.hpp"

namespace osgen {

/// k x k row-stochastic matrix, row-major rows.
using TransitionMatrix = std::vector<std::vector<double>>;

/// Ordered component list plus the success and failure transition matrices.
/// Row i of `success` is used after component i improved the solution,
/// row i of `fail` otherwise.
struct CmcsConfiguration {
    std::vector<std::string> components;
    TransitionMatrix success;
    TransitionMatrix fail;

    [[nodiscard]] std::size_t size() const noexcept { return components.size(); }
    /// Every row of both matrices is one-hot.
    [[nodiscard]] bool deterministic() const noexcept;

    friend bool operator==(const CmcsConfiguration&, const CmcsConfiguration&) = default;
};

inline constexpr double kRowSumTolerance = 1e-9;

/// Describes the first violated invariant, or nullopt when the configuration
/// is valid against a pool with the given component names.
[[nodiscard]] std::optional<std::string> configuration_error(const CmcsConfiguration& config,
                                                             const std::vector<std::string>& pool_names);

/// Throws ConfigError with the message of configuration_error.
void validate_configuration(const CmcsConfiguration& config, const std::vector<std::string>& pool_names);

template <Binding B>
void validate_configuration(const CmcsConfiguration& config, const ComponentPool<B>& pool) {
    validate_configuration(config, pool.names());
}

/// Maps configuration positions to pool positions. Assumes a valid configuration.
template <Binding B>
std::vector<std::size_t> resolve(const CmcsConfiguration& config, const ComponentPool<B>& pool) {
    std::vector<std::size_t> out;
    out.reserve(config.size());
    for (const auto& name : config.components) out.push_back(*pool.find(name));
    return out;
}

/// Samples the next configuration position. One-hot rows consume no randomness.
std::size_t select_next(std::size_t last, bool improved, const CmcsConfiguration& config, Rng& rng);

/// "self-loop-hill-climb" over (hill-climber, mutation): repeat the
/// hill-climber while it improves, otherwise mutate once and return to it.
CmcsConfiguration emulate_metaheuristic(std::string_view name, std::string first, std::string second);

/// Line-oriented text form; doubles are written in shortest round-trip form.
std::string write_configuration(const CmcsConfiguration& config);
CmcsConfiguration parse_configuration(std::string_view text);

/// Wall-clock budget or an exact iteration count. In iteration mode
/// components see an unbounded deadline, making runs reproducible.
struct Budget {
    enum class Kind { Time, Iterations };
    Kind kind = Kind::Time;
    std::chrono::nanoseconds time{0};
    std::uint64_t iterations = 0;

    static Budget millis(double ms) {
        return {Kind::Time, std::chrono::nanoseconds(static_cast<std::int64_t>(ms * 1e6)), 0};
    }
    static Budget of_iterations(std::uint64_t n) { return {Kind::Iterations, {}, n}; }
    [[nodiscard]] bool timed() const noexcept { return kind == Kind::Time; }
};

/// One component application.
struct TraceRecord {
    std::uint64_t iteration = 0;
    std::string component;
    Objective before = 0;
    Objective after = 0;
    bool improved = false;
    Objective best = 0;
};

/// Tab-separated: iteration, component, before, after, improved (0/1), best.
std::string format_trace_record(const TraceRecord& r);

struct RunOptions {
    /// Keep (iteration, best) after every iteration.
    bool record_objective_trace = false;
    /// Keep a full TraceRecord per iteration.
    bool record_components = false;
};

template <class Solution>
struct RunResult {
    Solution best_solution;
    Objective best_objective = kWorstObjective;
    std::uint64_t iterations = 0;
    double elapsed_ms = 0;
    /// (iteration, best objective so far); iteration 0 is the initial solution.
    std::vector<std::pair<std::uint64_t, Objective>> objective_trace;
    std::vector<TraceRecord> records;
};

/// Runs CMCS from a random solution, starting with configuration position 0.
/// Stops at the first selection point at which the budget is used up. A
/// throwing component aborts the run with ComponentFailure naming it.
template <Binding B>
RunResult<typename B::Solution> run(const CmcsConfiguration& config, const ComponentPool<B>& pool, const B& binding,
                                    const Budget& budget, Rng& rng, const RunOptions& options = {}) {
    using Clock = std::chrono::steady_clock;
    validate_configuration(config, pool);
    const auto slots = resolve(config, pool);
    const auto start = Clock::now();
    const Deadline deadline = budget.timed() ? Deadline::at(start + budget.time) : Deadline::never();

    RunResult<typename B::Solution> result{binding.random_solution(rng), 0, 0, 0, {}, {}};
    auto current = result.best_solution;
    Objective current_obj = binding.objective(current);
    result.best_objective = current_obj;
    if (options.record_objective_trace) result.objective_trace.emplace_back(0, current_obj);

    std::size_t position = 0;
    bool improved = false;
    for (std::uint64_t iter = 0;; ++iter) {
        if (budget.timed() ? deadline.expired() : iter >= budget.iterations) break;
        if (iter > 0) position = select_next(position, improved, config, rng);
        const auto& component = pool[slots[position]];
        const Objective before = current_obj;
        try {
            component.apply(current, binding, rng, deadline);
            current_obj = binding.objective(current);
        } catch (const std::exception& e) {
            throw ComponentFailure(component.name, e.what());
        }
        improved = current_obj < before;
        if (current_obj < result.best_objective) {
            result.best_objective = current_obj;
            result.best_solution = current;
        }
        result.iterations = iter + 1;
        if (options.record_objective_trace) result.objective_trace.emplace_back(iter + 1, result.best_objective);
        if (options.record_components)
            result.records.push_back({iter + 1, component.name, before, current_obj, improved, result.best_objective});
    }
    result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

} // namespace osgen
