// SPDX-License-Identifier: Apache-2.0
#include "settings.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "osgen/error.hpp"

namespace osgen::cli {

namespace {

using nlohmann::json;

template <class T>
void take(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) out = obj.at(key).get<T>();
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : (base / path).lexically_normal();
}

} // namespace

Settings load_settings(const std::optional<std::filesystem::path>& file) {
    Settings s;
    if (!file) return s;
    std::ifstream in(*file, std::ios::binary);
    if (!in) throw IoError("cannot read configuration file " + file->string());
    std::ostringstream text;
    text << in.rdbuf();
    const auto base = file->parent_path();
    try {
        const json root = json::parse(text.str());
        if (!root.is_object()) throw ConfigError("configuration file must hold a JSON object");
        if (root.contains("backend")) {
            const auto& b = root.at("backend");
            take(b, "kind", s.backend_kind);
            if (b.contains("script")) s.mock_script = resolve(base, b.at("script").get<std::string>());
            take(b, "endpoint", s.http.endpoint);
            take(b, "model", s.http.model);
            take(b, "api_key_env", s.http.api_key_env);
            if (b.contains("temperature")) s.http.temperature = b.at("temperature").get<double>();
            if (b.contains("timeout_s")) s.http.timeout = std::chrono::seconds(b.at("timeout_s").get<long>());
        }
        auto& host = s.generate.host;
        if (root.contains("host")) {
            const auto& h = root.at("host");
            take(h, "python", host.python);
            if (h.contains("worker_script")) host.worker_script = resolve(base, h.at("worker_script").get<std::string>());
            if (h.contains("startup_ms")) host.limits.startup = std::chrono::milliseconds(h.at("startup_ms").get<long>());
            if (h.contains("per_call_ms")) host.limits.per_call = std::chrono::milliseconds(h.at("per_call_ms").get<long>());
            take(h, "memory_mb", host.limits.memory_mb);
        }
        if (root.contains("policy")) {
            const auto& p = root.at("policy");
            auto& pol = s.generate.policy;
            take(p, "instance_repairs", pol.instance_repairs);
            take(p, "solution_repairs", pol.solution_repairs);
            take(p, "algorithm_repairs", pol.algorithm_repairs);
            take(p, "mutation_target", pol.mutation_target);
            take(p, "mutation_total_attempts", pol.mutation_total_attempts);
            take(p, "mutation_repairs_each", pol.mutation_repairs_each);
            take(p, "os_restarts", pol.os_restarts);
            take(p, "transport_retries", pol.transport_retries);
            take(p, "mutation_trials", pol.mutation_trials);
            generator::validate_policy(pol);
        }
        take(root, "validation_budget_ms", s.generate.validation_budget_ms);
        if (root.contains("training")) {
            const auto& t = root.at("training");
            if (t.contains("budget_ms")) s.generate.training.budget = Budget::millis(t.at("budget_ms").get<double>());
            take(t, "max_instances", s.generate.training.max_instances);
            take(t, "threads", s.generate.training.threads);
        }
    } catch (const json::exception& e) {
        throw ConfigError("configuration file " + file->string() + ": " + e.what());
    }
    return s;
}

} // namespace osgen::cli
