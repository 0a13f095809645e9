// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "osgen/generator/llm.hpp"
#include "osgen/generator/orchestrator.hpp"

namespace osgen::cli {

/// Contents of the optional JSON configuration file. Relative paths are
/// resolved against the file's directory.
///
///   {
///     "backend": {"kind": "mock" | "http", "script": "...", "endpoint": "...",
///                 "model": "...", "api_key_env": "...", "temperature": 0.0,
///                 "timeout_s": 300},
///     "host": {"python": "python3", "worker_script": "...", "startup_ms": 15000,
///              "per_call_ms": 10000, "memory_mb": 4096},
///     "policy": {"instance_repairs": 2, "solution_repairs": 2, "algorithm_repairs": 4,
///                "mutation_target": 2, "mutation_total_attempts": 10,
///                "mutation_repairs_each": 2, "os_restarts": 3, "transport_retries": 3,
///                "mutation_trials": 100},
///     "validation_budget_ms": 1000,
///     "training": {"budget_ms": 1000, "max_instances": 5, "threads": 1}
///   }
struct Settings {
    std::string backend_kind = "mock";
    std::filesystem::path mock_script;
    generator::HttpBackendConfig http;
    generator::GenerateOptions generate;
};

/// Defaults with host settings from the environment, overlaid by `file` when given.
Settings load_settings(const std::optional<std::filesystem::path>& file);

} // namespace osgen::cli
