// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "osgen/rng.hpp"
#include "osgen/types.hpp"

namespace osgen {

/// Compile-time face of a built-in problem: file formats, random solutions,
/// feasibility and the objective. Solutions are held 0-based in memory and
/// written 1-based.
///
/// `evaluate` assumes feasibility and is the hot path; `objective` checks
/// feasibility first and throws ContractViolation otherwise.
template <class P>
concept Problem = requires(std::string_view text, const typename P::Instance& inst,
                           const typename P::Solution& sol, Rng& rng) {
    typename P::Instance;
    typename P::Solution;
    { P::name } -> std::convertible_to<std::string_view>;
    { P::parse_instance(text) } -> std::same_as<typename P::Instance>;
    { P::write_instance(inst) } -> std::same_as<std::string>;
    { P::parse_solution(text) } -> std::same_as<typename P::Solution>;
    { P::write_solution(sol) } -> std::same_as<std::string>;
    { P::random_solution(inst, rng) } -> std::same_as<typename P::Solution>;
    { P::check(inst, sol) } -> std::same_as<Feasibility>;
    { P::evaluate(inst, sol) } -> std::same_as<std::int64_t>;
    { P::objective(inst, sol) } -> std::same_as<std::int64_t>;
};

enum class ProblemKind { Tsp, Gtsp, Ap, Etp };

[[nodiscard]] std::string_view to_string(ProblemKind kind) noexcept;
/// Accepts "tsp", "gtsp", "ap", "etp" (case-insensitive); throws ConfigError otherwise.
[[nodiscard]] ProblemKind parse_problem_kind(std::string_view name);

} // namespace osgen
