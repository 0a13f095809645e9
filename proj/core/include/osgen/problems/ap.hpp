// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osgen/problems/problem.hpp"

namespace osgen {

namespace ap {

/// n people, n jobs and a cost c(p, j) for every pair; costs are any integers.
struct Instance {
    CostMatrix cost;

    [[nodiscard]] std::size_t size() const noexcept { return cost.size(); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

} // namespace ap

/// Assignment problem. A solution maps person p (position) to a job; it must be a permutation.
struct Ap {
    using Instance = ap::Instance;
    using Solution = std::vector<int>;
    static constexpr std::string_view name = "ap";

    static Instance parse_instance(std::string_view text);
    static std::string write_instance(const Instance& inst);
    static Solution parse_solution(std::string_view text);
    static std::string write_solution(const Solution& assignment);
    static Solution random_solution(const Instance& inst, Rng& rng);
    static Feasibility check(const Instance& inst, const Solution& assignment);
    static std::int64_t evaluate(const Instance& inst, const Solution& assignment);
    static std::int64_t objective(const Instance& inst, const Solution& assignment);
};

} // namespace osgen
