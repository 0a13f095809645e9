// SPDX-License-Identifier: Apache-2.0
#include "osgen/problems/gtsp.hpp"

#include <numeric>

#include "osgen/error.hpp"
#include "osgen/problems/text.hpp"
#include "osgen/problems/tsp.hpp"

namespace osgen {

namespace {

std::int64_t parse_labelled(const text::Line& line, std::string_view label) {
    std::string_view body = line.content;
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
    if (body.substr(0, label.size()) != label || body.size() <= label.size() || body[label.size()] != ':')
        throw ParseError(line.number, "expected '" + std::string(label) + ": <integer>'");
    body.remove_prefix(label.size() + 1);
    const auto toks = text::tokens(body);
    if (toks.size() != 1) throw ParseError(line.number, "expected '" + std::string(label) + ": <integer>'");
    return text::parse_int(toks.front(), line.number);
}

} // namespace

void gtsp::index_clusters(Instance& inst) {
    inst.cluster_of.assign(inst.n_cities, -1);
    for (std::size_t k = 0; k < inst.clusters.size(); ++k) {
        if (inst.clusters[k].empty()) throw ContractViolation("cluster " + std::to_string(k + 1) + " is empty");
        for (int city : inst.clusters[k]) {
            if (city < 0 || static_cast<std::size_t>(city) >= inst.n_cities)
                throw ContractViolation("city " + std::to_string(city + 1) + " out of range");
            auto& slot = inst.cluster_of[static_cast<std::size_t>(city)];
            if (slot != -1)
                throw ContractViolation("city " + std::to_string(city + 1) + " belongs to clusters " +
                                        std::to_string(slot + 1) + " and " + std::to_string(k + 1));
            slot = static_cast<int>(k);
        }
    }
    for (std::size_t c = 0; c < inst.n_cities; ++c)
        if (inst.cluster_of[c] == -1) throw ContractViolation("city " + std::to_string(c + 1) + " is in no cluster");
}

Gtsp::Instance Gtsp::parse_instance(std::string_view text_in) {
    const auto lines = text::split_lines(text_in);
    if (lines.size() < 4) throw ParseError(lines.size() + 1, "truncated header: expected N, M and two more lines");
    const auto n = parse_labelled(lines[0], "N");
    const auto m = parse_labelled(lines[1], "M");
    if (n <= 0) throw ParseError(1, "N must be positive");
    if (m <= 0) throw ParseError(2, "M must be positive");
    if (m > n) throw ParseError(2, "M exceeds N");

    Instance inst;
    inst.n_cities = static_cast<std::size_t>(n);
    inst.header_lines = {std::string(lines[2].content), std::string(lines[3].content)};
    inst.cluster_of.assign(inst.n_cities, -1);

    std::size_t idx = 4;
    for (std::int64_t k = 0; k < m; ++k, ++idx) {
        if (idx >= lines.size()) throw ParseError(lines.back().number + 1, "missing cluster line " + std::to_string(k + 1));
        const auto values = text::parse_ints(lines[idx]);
        const auto line_no = lines[idx].number;
        if (values.empty() || values[0] <= 0) throw ParseError(line_no, "cluster line must start with a positive size");
        if (static_cast<std::int64_t>(values.size()) - 1 != values[0])
            throw ParseError(line_no, "cluster size " + std::to_string(values[0]) + " but " +
                                          std::to_string(values.size() - 1) + " cities listed");
        std::vector<int> members;
        for (std::size_t i = 1; i < values.size(); ++i) {
            const auto city = values[i];
            if (city < 1 || city > n) throw ParseError(line_no, "city " + std::to_string(city) + " outside [1, N]");
            auto& owner = inst.cluster_of[static_cast<std::size_t>(city - 1)];
            if (owner != -1)
                throw ParseError(line_no, "city " + std::to_string(city) + " already belongs to cluster " +
                                              std::to_string(owner + 1));
            owner = static_cast<int>(k);
            members.push_back(static_cast<int>(city - 1));
        }
        inst.clusters.push_back(std::move(members));
    }
    for (std::size_t c = 0; c < inst.n_cities; ++c)
        if (inst.cluster_of[c] == -1)
            throw ParseError(lines[idx - 1].number, "clusters do not cover city " + std::to_string(c + 1));

    inst.cost = parse_cost_matrix(lines, idx, inst.n_cities, true);
    text::expect_trailing_blank(lines, idx + inst.n_cities);
    return inst;
}

std::string Gtsp::write_instance(const Instance& inst) {
    std::string out = "N: " + std::to_string(inst.n_cities) + "\nM: " + std::to_string(inst.n_clusters()) + "\n";
    out += inst.header_lines[0] + "\n" + inst.header_lines[1] + "\n";
    for (const auto& cluster : inst.clusters) {
        out += std::to_string(cluster.size());
        for (int city : cluster) out += " " + std::to_string(city + 1);
        out.push_back('\n');
    }
    write_cost_matrix(inst.cost, out);
    return out;
}

Gtsp::Solution Gtsp::parse_solution(std::string_view text_in) { return text::parse_one_based_line(text_in); }

std::string Gtsp::write_solution(const Solution& tour) { return text::write_one_based_line(tour); }

Gtsp::Solution Gtsp::random_solution(const Instance& inst, Rng& rng) {
    std::vector<int> order(inst.n_clusters());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<int>(order));
    Solution tour;
    tour.reserve(order.size());
    for (int k : order) {
        const auto& members = inst.clusters[static_cast<std::size_t>(k)];
        tour.push_back(members[rng.index(members.size())]);
    }
    return tour;
}

Feasibility Gtsp::check(const Instance& inst, const Solution& tour) {
    if (tour.size() != inst.n_clusters())
        return Feasibility::violated("tour has " + std::to_string(tour.size()) + " cities, expected exactly one per cluster (" +
                                     std::to_string(inst.n_clusters()) + ")");
    std::vector<int> visited_at(inst.n_clusters(), -1);
    for (std::size_t pos = 0; pos < tour.size(); ++pos) {
        const int city = tour[pos];
        if (city < 0 || static_cast<std::size_t>(city) >= inst.n_cities)
            return Feasibility::violated("city " + std::to_string(static_cast<long long>(city) + 1) + " at position " +
                                         std::to_string(pos + 1) + " is outside [1, " + std::to_string(inst.n_cities) + "]");
        const auto k = static_cast<std::size_t>(inst.cluster_of[static_cast<std::size_t>(city)]);
        if (visited_at[k] != -1)
            return Feasibility::violated("cluster " + std::to_string(k + 1) + " is visited twice (positions " +
                                         std::to_string(visited_at[k] + 1) + " and " + std::to_string(pos + 1) + ")");
        visited_at[k] = static_cast<int>(pos);
    }
    return Feasibility::ok();
}

std::int64_t Gtsp::evaluate(const Instance& inst, const Solution& tour) { return cyclic_cost(inst.cost, tour); }

std::int64_t Gtsp::objective(const Instance& inst, const Solution& tour) {
    if (auto f = check(inst, tour); !f) throw ContractViolation("objective of infeasible GTSP tour: " + f.diagnostic);
    return evaluate(inst, tour);
}

} // namespace osgen
