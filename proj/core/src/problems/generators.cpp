// SPDX-License-Identifier: Apache-2.0
#include "osgen/problems/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace osgen::generators {

namespace {

CostMatrix euclidean_matrix(std::size_t n, Rng& rng) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts(n);
    for (auto& p : pts) p = {rng.uniform_int(0, 999), rng.uniform_int(0, 999)};
    CostMatrix cost(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const double dx = static_cast<double>(pts[u].first - pts[v].first);
            const double dy = static_cast<double>(pts[u].second - pts[v].second);
            cost.at(u, v) = std::max<std::int64_t>(1, std::llround(std::sqrt(dx * dx + dy * dy)));
        }
    return cost;
}

} // namespace

ap::Instance uniform_ap(std::size_t n, std::int64_t max_cost, Rng& rng) {
    ap::Instance inst{CostMatrix(n)};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t j = 0; j < n; ++j) inst.cost.at(p, j) = rng.uniform_int(0, max_cost);
    return inst;
}

std::vector<ap::Instance> ap_instances(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ap::Instance> out;
    for (std::size_t n = 10; n <= 100; n += 10) out.push_back(uniform_ap(n, 99, rng));
    return out;
}

std::vector<etp::Instance> etp_instances(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<etp::Instance> out;
    for (std::int64_t i = 1; i <= 10; ++i) {
        etp::Instance inst;
        inst.n_exams = static_cast<std::size_t>(rng.uniform_int(5, 5 * i + 5));
        const auto n = static_cast<std::int64_t>(inst.n_exams);
        inst.n_slots = static_cast<std::size_t>(rng.uniform_int(n, 2 * n));
        const auto students = static_cast<std::size_t>(rng.uniform_int(5, 5 * i + 5));
        std::vector<int> pool(inst.n_exams);
        for (std::size_t s = 0; s < students; ++s) {
            const auto take = static_cast<std::size_t>(rng.uniform_int(2, 4));
            std::iota(pool.begin(), pool.end(), 0);
            // Partial Fisher-Yates: the first `take` entries are a uniform sample.
            for (std::size_t k = 0; k < take; ++k) std::swap(pool[k], pool[k + rng.index(pool.size() - k)]);
            inst.student_exams.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
        }
        out.push_back(std::move(inst));
    }
    return out;
}

tsp::Instance euclidean_tsp(std::size_t n, Rng& rng) { return {euclidean_matrix(n, rng)}; }

gtsp::Instance euclidean_gtsp(std::size_t n, std::size_t m, Rng& rng) {
    gtsp::Instance inst;
    inst.n_cities = n;
    inst.cost = euclidean_matrix(n, rng);
    std::vector<int> cities(n);
    std::iota(cities.begin(), cities.end(), 0);
    rng.shuffle(std::span<int>(cities));
    inst.clusters.assign(m, {});
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = i < m ? i : rng.index(m);
        inst.clusters[k].push_back(cities[i]);
    }
    for (auto& c : inst.clusters) std::sort(c.begin(), c.end());
    inst.header_lines = {"Symmetric: true", "Triangle: false"};
    gtsp::index_clusters(inst);
    return inst;
}

} // namespace osgen::generators
