// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osgen/description.hpp"

namespace osgen::generator {

/// Algorithmic approach requested from a monolithic algorithm generator.
enum class Approach { Free, SimulatedAnnealing, TabuSearch, IteratedLocalSearch };

/// "free", "simulated annealing", "tabu search", "iterated local search"
/// (case-insensitive; '-' and '_' read as spaces). Throws ConfigError.
[[nodiscard]] Approach parse_approach(std::string_view label);
/// Phrase substituted into the algorithm prompt; empty for Free.
[[nodiscard]] std::string_view approach_phrase(Approach approach) noexcept;

/// Instance class prompt: problem description block then instructions.
[[nodiscard]] std::string render_instance_prompt(const ProblemDescription& desc);
/// Solution class prompt with the solution file format embedded.
[[nodiscard]] std::string render_solution_prompt(const ProblemDescription& desc);
/// Monolithic algorithm prompt; the approach sentence is omitted for Free.
[[nodiscard]] std::string render_algorithm_prompt(const ProblemDescription& desc, Approach approach);
/// Reduction-based algorithm prompt targeting a MIP solver.
[[nodiscard]] std::string render_mip_prompt(const ProblemDescription& desc);
/// Prompt for class MyMutation<index>. The differentiation sentence lists
/// `prior_names` joined by ", " and is omitted when the list is empty.
/// Throws ConfigError for index < 1.
[[nodiscard]] std::string render_mutation_prompt(const ProblemDescription& desc, int index,
                                                 const std::vector<std::string>& prior_names);

} // namespace osgen::generator
