// SPDX-License-Identifier: Apache-2.0
#include "osgen/exact.hpp"

#include <algorithm>
#include <limits>

#include "osgen/error.hpp"

namespace osgen::exact {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

/// DP over (subset of visited nodes, last node) for a closed walk from a
/// fixed start. Node v may be any of `choices[v]`; a node is a group of
/// interchangeable cities (clusters for GTSP, singletons for TSP).
Optimum group_tour(const CostMatrix& cost, const std::vector<std::vector<int>>& groups) {
    const std::size_t k = groups.size();
    if (k > kMaxDpCities) throw ConfigError("exact tour solver supports at most " + std::to_string(kMaxDpCities) + " nodes");
    if (k == 1) {
        Optimum best{{groups[0][0]}, kInf};
        for (int c : groups[0]) {
            const std::int64_t v = cost(static_cast<std::size_t>(c), static_cast<std::size_t>(c));
            if (v < best.objective) best = {{c}, v};
        }
        return best;
    }
    const std::size_t n_cities = cost.size();
    const std::size_t full = std::size_t{1} << (k - 1); // subsets of groups 1..k-1
    Optimum best{{}, kInf};
    std::vector<std::int64_t> dp;
    std::vector<int> parent;
    std::vector<int> group_of(n_cities, -1);
    for (std::size_t q = 0; q < k; ++q)
        for (int c : groups[q]) group_of[static_cast<std::size_t>(c)] = static_cast<int>(q);
    for (int start : groups[0]) {
        dp.assign(full * n_cities, kInf);
        parent.assign(full * n_cities, -1);
        auto at = [&](std::size_t mask, int city) -> std::size_t { return mask * n_cities + static_cast<std::size_t>(city); };
        for (std::size_t g = 1; g < k; ++g)
            for (int c : groups[g]) {
                const auto m = std::size_t{1} << (g - 1);
                dp[at(m, c)] = cost(static_cast<std::size_t>(start), static_cast<std::size_t>(c));
                parent[at(m, c)] = start;
            }
        for (std::size_t mask = 1; mask < full; ++mask) {
            for (std::size_t g = 1; g < k; ++g) {
                if (!(mask >> (g - 1) & 1)) continue;
                for (int last : groups[g]) {
                    const std::int64_t base = dp[at(mask, last)];
                    if (base >= kInf) continue;
                    for (std::size_t h = 1; h < k; ++h) {
                        if (mask >> (h - 1) & 1) continue;
                        const std::size_t next_mask = mask | (std::size_t{1} << (h - 1));
                        for (int c : groups[h]) {
                            const std::int64_t v = base + cost(static_cast<std::size_t>(last), static_cast<std::size_t>(c));
                            if (v < dp[at(next_mask, c)]) {
                                dp[at(next_mask, c)] = v;
                                parent[at(next_mask, c)] = last;
                            }
                        }
                    }
                }
            }
        }
        const std::size_t all = full - 1;
        for (std::size_t g = 1; g < k; ++g) {
            for (int last : groups[g]) {
                const std::int64_t base = dp[at(all, last)];
                if (base >= kInf) continue;
                const std::int64_t v = base + cost(static_cast<std::size_t>(last), static_cast<std::size_t>(start));
                if (v < best.objective) {
                    std::vector<int> tour;
                    std::size_t mask = all;
                    int city = last;
                    while (mask != 0) {
                        tour.push_back(city);
                        const int prev = parent[at(mask, city)];
                        mask &= ~(std::size_t{1} << (group_of[static_cast<std::size_t>(city)] - 1));
                        city = prev;
                    }
                    tour.push_back(start);
                    std::reverse(tour.begin(), tour.end());
                    best = {std::move(tour), v};
                }
            }
        }
    }
    return best;
}

} // namespace

Optimum solve_tsp(const tsp::Instance& inst) {
    std::vector<std::vector<int>> groups(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) groups[i] = {static_cast<int>(i)};
    return group_tour(inst.cost, groups);
}

Optimum solve_gtsp(const gtsp::Instance& inst) { return group_tour(inst.cost, inst.clusters); }

ApCertificate solve_ap(const ap::Instance& inst) {
    const std::size_t n = inst.size();
    // Shortest augmenting paths with potentials, 1-based with a virtual column 0.
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            std::int64_t delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = inst.cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    ApCertificate cert;
    cert.optimum.solution.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) cert.optimum.solution[p[j] - 1] = static_cast<int>(j - 1);
    cert.optimum.objective = Ap::evaluate(inst, cert.optimum.solution);
    cert.row_potential.assign(u.begin() + 1, u.end());
    cert.col_potential.assign(v.begin() + 1, v.end());
    return cert;
}

bool verify_ap_certificate(const ap::Instance& inst, const ApCertificate& cert) {
    const std::size_t n = inst.size();
    if (cert.row_potential.size() != n || cert.col_potential.size() != n || !Ap::check(inst, cert.optimum.solution))
        return false;
    std::int64_t dual = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dual += cert.row_potential[i] + cert.col_potential[i];
        for (std::size_t j = 0; j < n; ++j)
            if (cert.row_potential[i] + cert.col_potential[j] > inst.cost(i, j)) return false;
        const auto j = static_cast<std::size_t>(cert.optimum.solution[i]);
        if (cert.row_potential[i] + cert.col_potential[j] != inst.cost(i, j)) return false;
    }
    return dual == cert.optimum.objective && Ap::evaluate(inst, cert.optimum.solution) == cert.optimum.objective;
}

} // namespace osgen::exact
