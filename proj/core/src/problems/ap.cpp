// SPDX-License-Identifier: Apache-2.0
#include "osgen/problems/ap.hpp"

#include <numeric>

#include "osgen/error.hpp"
#include "osgen/problems/text.hpp"
#include "osgen/problems/tsp.hpp"
#include "permutation.hpp"

namespace osgen {

Ap::Instance Ap::parse_instance(std::string_view text_in) {
    const auto lines = text::split_lines(text_in);
    if (lines.empty()) throw ParseError(1, "empty instance");
    const auto n = text::parse_single_int(lines[0], "number of people n");
    if (n <= 0) throw ParseError(1, "n must be positive, got " + std::to_string(n));
    Instance inst{parse_cost_matrix(lines, 1, static_cast<std::size_t>(n), false)};
    text::expect_trailing_blank(lines, 1 + static_cast<std::size_t>(n));
    return inst;
}

std::string Ap::write_instance(const Instance& inst) {
    std::string out = std::to_string(inst.size()) + "\n";
    write_cost_matrix(inst.cost, out);
    return out;
}

Ap::Solution Ap::parse_solution(std::string_view text_in) { return text::parse_one_based_line(text_in); }

std::string Ap::write_solution(const Solution& assignment) { return text::write_one_based_line(assignment); }

Ap::Solution Ap::random_solution(const Instance& inst, Rng& rng) {
    Solution assignment(inst.size());
    std::iota(assignment.begin(), assignment.end(), 0);
    rng.shuffle(std::span<int>(assignment));
    return assignment;
}

Feasibility Ap::check(const Instance& inst, const Solution& assignment) {
    return detail::check_permutation(assignment, inst.size(), "job", "assignment");
}

std::int64_t Ap::evaluate(const Instance& inst, const Solution& assignment) {
    std::int64_t total = 0;
    for (std::size_t p = 0; p < assignment.size(); ++p)
        total = checked_add(total, inst.cost(p, static_cast<std::size_t>(assignment[p])));
    return total;
}

std::int64_t Ap::objective(const Instance& inst, const Solution& assignment) {
    if (auto f = check(inst, assignment); !f) throw ContractViolation("objective of infeasible assignment: " + f.diagnostic);
    return evaluate(inst, assignment);
}

} // namespace osgen
