// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "osgen/cmcs.hpp"
#include "osgen/host/hosted_session.hpp"
#include "osgen/validation.hpp"

namespace osgen::generator {

/// Algorithm generators: monolithic (free or with an approach), reduction to
/// MIP, or component-based CMCS.
enum class GeneratorKind { Free, SA, TS, ILS, MIP, CMCS };

[[nodiscard]] std::string_view to_string(GeneratorKind kind) noexcept;
/// Accepts the names above case-insensitively; throws ConfigError.
[[nodiscard]] GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratedUnit {
    validation::UnitKind kind = validation::UnitKind::Instance;
    int mutation_index = 0;
    std::string source;
    /// Index of the assistant message in the conversation it came from.
    std::size_t origin = 0;

    /// Name used for hosting and files: instance, solution, algorithm, MyMutation<i>.
    [[nodiscard]] std::string name() const;
};

/// An assembled optimisation system. Algorithm kinds carry an algorithm unit;
/// CMCS carries mutation units and the trained configuration.
struct GeneratedOs {
    GeneratorKind kind = GeneratorKind::CMCS;
    std::vector<GeneratedUnit> units;
    std::optional<CmcsConfiguration> configuration;
    std::string training_report;
    std::vector<validation::ValidationReport> validation;

    [[nodiscard]] std::vector<UnitSource> unit_sources() const;
    [[nodiscard]] std::vector<std::string> mutation_classes() const;
    [[nodiscard]] bool has_algorithm_unit() const;
};

/// Directory layout: units/<name>.py, manifest.json, configuration.txt (CMCS),
/// training_report.tsv (CMCS), validation.jsonl.
void save_generated_os(const GeneratedOs& os, const std::filesystem::path& dir);
GeneratedOs load_generated_os(const std::filesystem::path& dir);

/// Worker hosting all units of `os`.
std::unique_ptr<HostedSession> open_session(const GeneratedOs& os, const HostConfig& host);

/// Runs the OS on the session's loaded instance and returns the solution text.
std::string solve_with(const GeneratedOs& os, OsSession& session, double budget_ms, std::uint64_t seed);

} // namespace osgen::generator
