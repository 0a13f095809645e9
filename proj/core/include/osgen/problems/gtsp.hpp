// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "osgen/problems/problem.hpp"

namespace osgen {

namespace gtsp {

/// N cities partitioned into M non-empty clusters, and an N x N cost matrix.
struct Instance {
    std::size_t n_cities = 0;
    std::vector<std::vector<int>> clusters; // 0-based city ids, in file order
    std::vector<int> cluster_of;            // city -> cluster index
    CostMatrix cost;
    /// The two free-form lines following "M: <int>", kept for byte-exact rewrite.
    std::array<std::string, 2> header_lines{"Symmetric: false", "Triangle: false"};

    [[nodiscard]] std::size_t n_clusters() const noexcept { return clusters.size(); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Rebuilds `cluster_of` from `clusters`; throws ContractViolation unless the
/// clusters partition {0..n_cities-1}.
void index_clusters(Instance& inst);

} // namespace gtsp

/// Generalised travelling salesman: a cyclic tour visiting exactly one city per cluster.
///
/// Instance file: "N: <int>", "M: <int>", two ignored lines, M cluster lines
/// "<size> <city>...", then the N x N matrix. Solution: one line of M cities, 1-based.
struct Gtsp {
    using Instance = gtsp::Instance;
    using Solution = std::vector<int>;
    static constexpr std::string_view name = "gtsp";

    static Instance parse_instance(std::string_view text);
    static std::string write_instance(const Instance& inst);
    static Solution parse_solution(std::string_view text);
    static std::string write_solution(const Solution& tour);
    /// Uniform cluster order, uniform member within each cluster.
    static Solution random_solution(const Instance& inst, Rng& rng);
    static Feasibility check(const Instance& inst, const Solution& tour);
    static std::int64_t evaluate(const Instance& inst, const Solution& tour);
    static std::int64_t objective(const Instance& inst, const Solution& tour);
};

} // namespace osgen
