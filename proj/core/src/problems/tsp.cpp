// SPDX-License-Identifier: Apache-2.0
#include "osgen/problems/tsp.hpp"

#include <numeric>

#include "osgen/error.hpp"
#include "permutation.hpp"

namespace osgen {

CostMatrix parse_cost_matrix(const std::vector<text::Line>& lines, std::size_t first, std::size_t n,
                             bool positive_off_diagonal) {
    CostMatrix cost(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t idx = first + r;
        if (idx >= lines.size()) {
            const std::size_t line_no = lines.empty() ? 1 : lines.back().number + 1;
            throw ParseError(line_no, "missing matrix row " + std::to_string(r + 1) + " of " +
                                          std::to_string(n));
        }
        const auto values = text::parse_ints(lines[idx]);
        if (values.size() != n)
            throw ParseError(lines[idx].number, "expected " + std::to_string(n) + " values, found " +
                                                    std::to_string(values.size()));
        for (std::size_t c = 0; c < n; ++c) {
            if (positive_off_diagonal && r != c && values[c] <= 0)
                throw ParseError(lines[idx].number, "non-positive cost " + std::to_string(values[c]) +
                                                        " in column " + std::to_string(c + 1));
            cost.at(r, c) = values[c];
        }
    }
    return cost;
}

void write_cost_matrix(const CostMatrix& cost, std::string& out) {
    for (std::size_t r = 0; r < cost.size(); ++r) {
        for (std::size_t c = 0; c < cost.size(); ++c) {
            if (c) out.push_back(' ');
            out += std::to_string(cost(r, c));
        }
        out.push_back('\n');
    }
}

std::int64_t cyclic_cost(const CostMatrix& cost, const std::vector<int>& cities) {
    if (cities.empty()) return 0;
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < cities.size(); ++i)
        total = checked_add(total, cost(static_cast<std::size_t>(cities[i]), static_cast<std::size_t>(cities[i + 1])));
    return checked_add(total, cost(static_cast<std::size_t>(cities.back()), static_cast<std::size_t>(cities.front())));
}

Tsp::Instance Tsp::parse_instance(std::string_view text_in) {
    const auto lines = text::split_lines(text_in);
    if (lines.empty()) throw ParseError(1, "empty instance");
    const auto n = text::parse_single_int(lines[0], "number of cities n");
    if (n <= 0) throw ParseError(1, "n must be positive, got " + std::to_string(n));
    Instance inst{parse_cost_matrix(lines, 1, static_cast<std::size_t>(n), true)};
    text::expect_trailing_blank(lines, 1 + static_cast<std::size_t>(n));
    return inst;
}

std::string Tsp::write_instance(const Instance& inst) {
    std::string out = std::to_string(inst.size()) + "\n";
    write_cost_matrix(inst.cost, out);
    return out;
}

Tsp::Solution Tsp::parse_solution(std::string_view text_in) { return text::parse_one_based_line(text_in); }

std::string Tsp::write_solution(const Solution& tour) { return text::write_one_based_line(tour); }

Tsp::Solution Tsp::random_solution(const Instance& inst, Rng& rng) {
    Solution tour(inst.size());
    std::iota(tour.begin(), tour.end(), 0);
    rng.shuffle(std::span<int>(tour));
    return tour;
}

Feasibility Tsp::check(const Instance& inst, const Solution& tour) {
    return detail::check_permutation(tour, inst.size(), "city", "tour");
}

std::int64_t Tsp::evaluate(const Instance& inst, const Solution& tour) { return cyclic_cost(inst.cost, tour); }

std::int64_t Tsp::objective(const Instance& inst, const Solution& tour) {
    if (auto f = check(inst, tour); !f) throw ContractViolation("objective of infeasible TSP tour: " + f.diagnostic);
    return evaluate(inst, tour);
}

} // namespace osgen
