// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace osgen::host {

/// How to launch a worker. The worker reads frames on its stdin and writes
/// frames on its stdout; stderr goes to `stderr_path` (or /dev/null).
struct LaunchSpec {
    std::vector<std::string> argv;
    std::size_t memory_mb = 0; // address-space limit, 0 = none
    std::filesystem::path stderr_path;
};

/// Frame: 4-byte big-endian payload length followed by the UTF-8 JSON payload.
std::string encode_frame(const nlohmann::json& message);

inline constexpr std::size_t kMaxFrameBytes = 256u << 20;

/// A child process speaking length-prefixed JSON on its standard streams.
/// Not thread-safe; one caller at a time.
class WorkerProcess {
public:
    explicit WorkerProcess(LaunchSpec launch);
    ~WorkerProcess();
    WorkerProcess(const WorkerProcess&) = delete;
    WorkerProcess& operator=(const WorkerProcess&) = delete;

    /// Forks and execs; throws HostError when the program cannot be started.
    void start();
    [[nodiscard]] bool running() const noexcept { return pid_ > 0; }
    /// SIGKILL and reap. Idempotent.
    void kill() noexcept;

    /// Sends one request and waits for one response. On timeout the worker
    /// is killed and HostTimeout is thrown; on EOF or a bad frame HostError.
    nlohmann::json call(const nlohmann::json& request, std::chrono::milliseconds timeout, const std::string& op);

    /// Last bytes the worker wrote to stderr, for diagnostics.
    [[nodiscard]] std::string stderr_tail(std::size_t max_bytes = 4096) const;
    [[nodiscard]] int pid() const noexcept { return pid_; }

private:
    void write_all(const std::string& bytes, std::chrono::steady_clock::time_point deadline, const std::string& op,
                   double limit_ms);
    std::string read_exact(std::size_t n, std::chrono::steady_clock::time_point deadline, const std::string& op,
                           double limit_ms);
    [[noreturn]] void fail_dead(const std::string& op);

    LaunchSpec spec_;
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
};

} // namespace osgen::host
