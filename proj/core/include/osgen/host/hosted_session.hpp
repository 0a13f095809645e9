// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "osgen/host/process.hpp"
#include "osgen/host/session.hpp"

namespace osgen {

struct HostLimits {
    std::chrono::milliseconds startup{15000};
    std::chrono::milliseconds per_call{10000};
    std::size_t memory_mb = 4096;
};

struct HostConfig {
    /// Interpreter; the worker script is passed with -c unless
    /// `worker_script` names a file.
    std::string python = "python3";
    std::filesystem::path worker_script;
    HostLimits limits;

    /// Reads OSGEN_PYTHON and OSGEN_WORKER_SCRIPT when set.
    static HostConfig from_environment();
};

/// A generated source unit. `name` tags tracebacks ("instance", "solution",
/// "algorithm", "MyMutation1", ...).
struct UnitSource {
    std::string name;
    std::string source;
};

/// Expected method of a class: name and positional arity including self.
struct MethodSpec {
    std::string name;
    int arity = 1;
};

struct StaticCheckResult {
    bool passed = true;
    std::string kind; // "static-error" or "missing-interface"
    std::string error_type;
    std::string message;
    std::size_t line = 0;
    std::string source_line;
};

struct LatencyStats {
    std::uint64_t calls = 0;
    double total_ms = 0;
    double max_ms = 0;
    [[nodiscard]] double mean_ms() const noexcept { return calls ? total_ms / static_cast<double>(calls) : 0.0; }
};

/// Time limit the worker gets for an algorithm run: budget + 10% + 100 ms.
[[nodiscard]] double algorithm_grace_limit_ms(double budget_ms) noexcept;

/// Units hosted in a Python worker process. Worker death or a per-call
/// timeout kills the worker; the next call starts a fresh one and replays
/// the units and the loaded instance.
class HostedSession final : public OsSession {
public:
    HostedSession(HostConfig config, std::vector<UnitSource> units, std::vector<std::string> mutation_classes = {},
                  bool has_algorithm = false);
    ~HostedSession() override;

    void load_instance(const std::filesystem::path& path) override;
    std::string random_solution(std::uint64_t seed) override;
    Feasibility is_feasible(const std::string& solution) override;
    Objective objective(const std::string& solution) override;
    void save_solution(const std::string& solution, const std::filesystem::path& path) override;
    std::string load_solution(const std::filesystem::path& path) override;
    [[nodiscard]] std::vector<std::string> mutation_names() const override { return mutations_; }
    std::string apply_mutation(const std::string& name, const std::string& solution, std::uint64_t seed) override;
    [[nodiscard]] bool has_algorithm() const override { return has_algorithm_; }
    AlgorithmRun run_algorithm(double budget_ms, std::uint64_t seed) override;

    /// Parses `source` and checks that `class_name` defines `methods`.
    StaticCheckResult static_check(const std::string& source, const std::string& class_name,
                                   const std::vector<MethodSpec>& methods);
    /// True when `source` is syntactically valid Python.
    bool parses(const std::string& source);

    /// Starts the worker now rather than on first use.
    void ensure_started();
    [[nodiscard]] const LatencyStats& latency() const noexcept { return latency_; }
    [[nodiscard]] std::size_t starts() const noexcept { return starts_; }
    /// Kills the worker, e.g. to exercise restart.
    void kill_worker() noexcept;
    [[nodiscard]] int worker_pid() const noexcept;

private:
    nlohmann::json invoke(const std::string& op, nlohmann::json args, std::chrono::milliseconds timeout);
    nlohmann::json invoke(const std::string& op, nlohmann::json args) {
        return invoke(op, std::move(args), config_.limits.per_call);
    }
    void remember_objective(const std::string& solution, Objective value);

    HostConfig config_;
    std::vector<UnitSource> units_;
    std::vector<std::string> mutations_;
    bool has_algorithm_;
    std::optional<std::filesystem::path> instance_;
    std::unique_ptr<host::WorkerProcess> worker_;
    std::filesystem::path stderr_path_;
    std::unordered_map<std::string, Objective> objective_cache_;
    LatencyStats latency_;
    std::size_t starts_ = 0;
};

} // namespace osgen
