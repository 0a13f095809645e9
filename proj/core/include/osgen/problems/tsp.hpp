// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osgen/problems/problem.hpp"
#include "osgen/problems/text.hpp"

namespace osgen {

namespace tsp {

/// n cities and the full cost matrix c(u, v). Off-diagonal costs are positive;
/// the diagonal is stored as read.
struct Instance {
    CostMatrix cost;

    [[nodiscard]] std::size_t size() const noexcept { return cost.size(); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

} // namespace tsp

/// Travelling salesman: a cyclic tour through every city exactly once.
///
/// Instance file: first line n, then n lines of n space-separated costs.
/// Solution file: one line with the n cities of the tour, 1-based.
struct Tsp {
    using Instance = tsp::Instance;
    using Solution = std::vector<int>;
    static constexpr std::string_view name = "tsp";

    static Instance parse_instance(std::string_view text);
    static std::string write_instance(const Instance& inst);
    static Solution parse_solution(std::string_view text);
    static std::string write_solution(const Solution& tour);
    /// Uniformly random permutation.
    static Solution random_solution(const Instance& inst, Rng& rng);
    static Feasibility check(const Instance& inst, const Solution& tour);
    static std::int64_t evaluate(const Instance& inst, const Solution& tour);
    static std::int64_t objective(const Instance& inst, const Solution& tour);
};

/// Cost of the closed walk visiting `cities` in order; shared with GTSP.
std::int64_t cyclic_cost(const CostMatrix& cost, const std::vector<int>& cities);

/// Reads an n x n cost matrix from `lines` starting at index `first`.
/// Off-diagonal entries must be positive when `positive_off_diagonal`.
CostMatrix parse_cost_matrix(const std::vector<text::Line>& lines, std::size_t first,
                             std::size_t n, bool positive_off_diagonal);

/// Appends the matrix rows, one line per row, to `out`.
void write_cost_matrix(const CostMatrix& cost, std::string& out);

} // namespace osgen
