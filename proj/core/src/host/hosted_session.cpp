// SPDX-License-Identifier: Apache-2.0
#include "osgen/host/hosted_session.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <unistd.h>

#include "host/worker_script.hpp"
#include "osgen/error.hpp"

namespace osgen {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kObjectiveCacheLimit = 1 << 16;

std::string unit_name(const json& v) {
    if (!v.is_string()) return {};
    auto s = v.get<std::string>();
    const std::string prefix = "<unit:";
    if (s.rfind(prefix, 0) == 0 && !s.empty() && s.back() == '>') s = s.substr(prefix.size(), s.size() - prefix.size() - 1);
    return s;
}

std::string str_or(const json& obj, const char* key, std::string fallback = {}) {
    auto it = obj.find(key);
    return it != obj.end() && it->is_string() ? it->get<std::string>() : fallback;
}

std::size_t line_or_zero(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it != obj.end() && it->is_number_integer() && it->get<long long>() > 0 ? it->get<std::size_t>() : 0;
}

Objective as_objective(const json& v, const std::string& op) {
    if (!v.is_number()) throw UnitError("BadObjective", op + " returned a non-numeric objective");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw UnitError("BadObjective", op + " returned a non-finite objective");
    return d;
}

fs::path fresh_stderr_path() {
    static std::atomic<unsigned> counter{0};
    return fs::temp_directory_path() /
           ("osgen-worker-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".stderr");
}

} // namespace

double algorithm_grace_limit_ms(double budget_ms) noexcept { return budget_ms * 1.1 + 100.0; }

HostConfig HostConfig::from_environment() {
    HostConfig c;
    if (const char* py = std::getenv("OSGEN_PYTHON"); py && *py) c.python = py;
    if (const char* script = std::getenv("OSGEN_WORKER_SCRIPT"); script && *script) c.worker_script = script;
    return c;
}

HostedSession::HostedSession(HostConfig config, std::vector<UnitSource> units, std::vector<std::string> mutation_classes,
                             bool has_algorithm)
    : config_(std::move(config)), units_(std::move(units)), mutations_(std::move(mutation_classes)),
      has_algorithm_(has_algorithm), stderr_path_(fresh_stderr_path()) {}

HostedSession::~HostedSession() {
    if (worker_ && worker_->running()) {
        try {
            worker_->call({{"op", "shutdown"}, {"args", json::object()}}, std::chrono::milliseconds(500), "shutdown");
        } catch (const std::exception&) {
        }
    }
    worker_.reset();
    std::error_code ec;
    fs::remove(stderr_path_, ec);
}

void HostedSession::kill_worker() noexcept {
    if (worker_) worker_->kill();
}

int HostedSession::worker_pid() const noexcept { return worker_ && worker_->running() ? worker_->pid() : -1; }

void HostedSession::ensure_started() {
    if (worker_ && worker_->running()) return;
    host::LaunchSpec launch;
    launch.argv = {config_.python, "-u"};
    if (config_.worker_script.empty()) {
        launch.argv.push_back("-c");
        launch.argv.push_back(host::kWorkerScript);
    } else {
        launch.argv.push_back(config_.worker_script.string());
    }
    launch.memory_mb = config_.limits.memory_mb;
    launch.stderr_path = stderr_path_;
    worker_ = std::make_unique<host::WorkerProcess>(std::move(launch));
    worker_->start();
    ++starts_;
    objective_cache_.clear();
    try {
        invoke("hello", json::object(), config_.limits.startup);
        if (!units_.empty()) {
            json list = json::array();
            for (const auto& u : units_) list.push_back({{"name", u.name}, {"source", u.source}});
            invoke("load_units", {{"units", list}}, config_.limits.startup);
        }
        if (instance_) invoke("load_instance", {{"path", instance_->string()}});
    } catch (...) {
        worker_->kill();
        throw;
    }
}

json HostedSession::invoke(const std::string& op, json args, std::chrono::milliseconds timeout) {
    ensure_started();
    const auto t0 = std::chrono::steady_clock::now();
    json response = worker_->call({{"op", op}, {"args", std::move(args)}}, timeout, op);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ++latency_.calls;
    latency_.total_ms += ms;
    latency_.max_ms = std::max(latency_.max_ms, ms);

    if (!response.is_object() || !response.contains("ok")) {
        worker_->kill();
        throw HostError("worker response lacks 'ok'");
    }
    if (response["ok"].get<bool>()) return response.value("payload", json::object());
    const json err = response.value("error", json::object());
    const auto type = str_or(err, "type", "Error");
    const auto message = str_or(err, "message");
    if (type == "ProtocolError" || type == "WorkerError") throw HostError("worker rejected '" + op + "': " + message);
    throw UnitError(type, message, line_or_zero(err, "line"), unit_name(err.value("unit", json())),
                    str_or(err, "source_line"));
}

void HostedSession::remember_objective(const std::string& solution, Objective value) {
    if (objective_cache_.size() >= kObjectiveCacheLimit) objective_cache_.clear();
    objective_cache_[solution] = value;
}

void HostedSession::load_instance(const fs::path& path) {
    instance_.reset();
    objective_cache_.clear();
    invoke("load_instance", {{"path", path.string()}});
    instance_ = path;
}

std::string HostedSession::random_solution(std::uint64_t seed) {
    return invoke("random_solution", {{"seed", seed}}).at("solution").get<std::string>();
}

Feasibility HostedSession::is_feasible(const std::string& solution) {
    const json r = invoke("is_feasible", {{"solution", solution}});
    if (r.at("feasible").get<bool>()) return Feasibility::ok();
    auto diag = r.value("diagnostic", std::string());
    while (!diag.empty() && (diag.back() == '\n' || diag.back() == ' ')) diag.pop_back();
    return Feasibility::violated(diag.empty() ? "is_feasible() returned False" : diag);
}

Objective HostedSession::objective(const std::string& solution) {
    if (auto it = objective_cache_.find(solution); it != objective_cache_.end()) return it->second;
    const auto v = as_objective(invoke("get_objective", {{"solution", solution}}).at("objective"), "get_objective");
    remember_objective(solution, v);
    return v;
}

void HostedSession::save_solution(const std::string& solution, const fs::path& path) {
    invoke("save_solution", {{"solution", solution}, {"path", path.string()}});
}

std::string HostedSession::load_solution(const fs::path& path) {
    return invoke("load_solution", {{"path", path.string()}}).at("solution").get<std::string>();
}

std::string HostedSession::apply_mutation(const std::string& name, const std::string& solution, std::uint64_t seed) {
    const json r =
        invoke("apply_mutation", {{"name", name}, {"solution", solution}, {"seed", seed}, {"with_objective", true}});
    auto out = r.at("solution").get<std::string>();
    if (r.contains("objective")) remember_objective(out, as_objective(r["objective"], "get_objective"));
    return out;
}

AlgorithmRun HostedSession::run_algorithm(double budget_ms, std::uint64_t seed) {
    const auto limit = std::chrono::milliseconds(static_cast<long long>(std::ceil(algorithm_grace_limit_ms(budget_ms))));
    const json r = invoke("run_algorithm", {{"time_budget_ms", static_cast<long long>(budget_ms)}, {"seed", seed}}, limit);
    return {r.at("solution").get<std::string>(), r.value("elapsed_ms", 0.0)};
}

StaticCheckResult HostedSession::static_check(const std::string& source, const std::string& class_name,
                                              const std::vector<MethodSpec>& methods) {
    json list = json::array();
    for (const auto& m : methods) list.push_back({{"name", m.name}, {"arity", m.arity}});
    const json r = invoke("static_check", {{"source", source}, {"class_name", class_name}, {"methods", list}});
    StaticCheckResult out;
    out.passed = r.value("passed", false);
    if (!out.passed) {
        out.kind = str_or(r, "kind", "static-error");
        out.error_type = str_or(r, "type", "Error");
        out.message = str_or(r, "message");
        out.line = line_or_zero(r, "line");
        out.source_line = str_or(r, "source_line");
    }
    return out;
}

bool HostedSession::parses(const std::string& source) {
    return invoke("parses", {{"source", source}}).value("parses", false);
}

} // namespace osgen
