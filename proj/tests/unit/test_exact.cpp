// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "osgen/exact.hpp"
#include "osgen/problems/generators.hpp"

using namespace osgen;

namespace {

std::int64_t enumerate_ap(const ap::Instance& inst) {
    std::vector<int> p(inst.size());
    std::iota(p.begin(), p.end(), 0);
    std::int64_t best = INT64_MAX;
    do best = std::min(best, Ap::evaluate(inst, p));
    while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::int64_t enumerate_gtsp(const gtsp::Instance& inst) {
    std::vector<int> order(inst.n_clusters());
    std::iota(order.begin(), order.end(), 0);
    std::int64_t best = INT64_MAX;
    do {
        // Every choice of member per cluster.
        std::vector<std::size_t> pick(order.size(), 0);
        for (;;) {
            std::vector<int> tour;
            for (std::size_t i = 0; i < order.size(); ++i)
                tour.push_back(inst.clusters[static_cast<std::size_t>(order[i])][pick[i]]);
            best = std::min(best, cyclic_cost(inst.cost, tour));
            std::size_t d = 0;
            while (d < pick.size() && ++pick[d] == inst.clusters[static_cast<std::size_t>(order[d])].size()) pick[d++] = 0;
            if (d == pick.size()) break;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

} // namespace

TEST_CASE("dynamic programmes match enumeration on small tours") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + rng.index(8);
        auto inst = generators::euclidean_tsp(n, rng);
        auto opt = exact::solve_tsp(inst);
        REQUIRE(Tsp::check(inst, opt.solution).feasible);
        REQUIRE(Tsp::objective(inst, opt.solution) == opt.objective);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::int64_t best = INT64_MAX;
        do best = std::min(best, Tsp::evaluate(inst, p));
        while (std::next_permutation(p.begin(), p.end()));
        REQUIRE(opt.objective == best);
    }
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng.index(7);
        auto inst = generators::euclidean_gtsp(n, 1 + rng.index(n), rng);
        auto opt = exact::solve_gtsp(inst);
        REQUIRE(Gtsp::check(inst, opt.solution).feasible);
        REQUIRE(Gtsp::objective(inst, opt.solution) == opt.objective);
        REQUIRE(opt.objective == enumerate_gtsp(inst));
    }
}

TEST_CASE("hungarian optimum is certified and matches enumeration") {
    Rng rng(32);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng.index(8);
        auto inst = generators::uniform_ap(n, 99, rng);
        if (t % 3 == 0)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) inst.cost.at(i, j) -= 50;
        auto cert = exact::solve_ap(inst);
        REQUIRE(exact::verify_ap_certificate(inst, cert));
        REQUIRE(cert.optimum.objective == enumerate_ap(inst));
    }
    auto big = generators::ap_instances(1).back();
    CHECK(exact::verify_ap_certificate(big, exact::solve_ap(big)));
}

TEST_CASE("oversized tours are refused") {
    Rng rng(1);
    CHECK_THROWS(exact::solve_tsp(generators::euclidean_tsp(exact::kMaxDpCities + 1, rng)));
}
