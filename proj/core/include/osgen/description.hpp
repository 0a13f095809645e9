// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace osgen {

/// A sample instance with one of its solutions and that solution's objective value.
struct ExampleCase {
    std::filesystem::path instance_path;
    std::filesystem::path solution_path;
    double objective_value = 0;
};

/// The user's problem statement, split into the sections each prompt needs.
///
/// File layout: every section starts with a header line "### <Section name> ###"
/// and its body runs verbatim up to the next header. Mandatory sections:
/// Input data, Solution, Constraints, Objective function, Instance file format,
/// Solution file format. Optional: "Example <i>" (repeatable; body lines
/// "Instance: <path>", "Solution: <path>", "Objective value: <number>") and
/// "Training instances" (one path per line). Paths are relative to the file.
struct ProblemDescription {
    std::string input_data;
    std::string solution;
    std::string constraints;
    std::string objective_function;
    std::string instance_file_format;
    std::string solution_file_format;
    std::vector<ExampleCase> examples;
    std::vector<std::filesystem::path> training_instances;
};

namespace section {
inline constexpr std::string_view kInputData = "Input data";
inline constexpr std::string_view kSolution = "Solution";
inline constexpr std::string_view kConstraints = "Constraints";
inline constexpr std::string_view kObjectiveFunction = "Objective function";
inline constexpr std::string_view kInstanceFileFormat = "Instance file format";
inline constexpr std::string_view kSolutionFileFormat = "Solution file format";
inline constexpr std::string_view kTrainingInstances = "Training instances";
inline constexpr std::string_view kExamplePrefix = "Example";
} // namespace section

/// Throws SchemaError (naming the section) for missing/duplicate/unknown
/// sections, IoError (naming the path) for referenced files that do not exist.
ProblemDescription parse_problem_description(std::string_view text, const std::filesystem::path& base_dir);

/// Reads `file` and resolves paths against its directory.
ProblemDescription load_problem_description(const std::filesystem::path& file);

/// Inverse of parsing for the text sections; paths are written relative to `base_dir`.
std::string write_problem_description(const ProblemDescription& desc, const std::filesystem::path& base_dir);

} // namespace osgen
