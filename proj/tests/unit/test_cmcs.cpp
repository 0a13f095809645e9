// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "osgen/cmcs.hpp"
#include "osgen/problems/generators.hpp"
#include "osgen/reference_mutations.hpp"
#include "osgen/trainer.hpp"

using namespace osgen;

namespace {

using TspB = NativeBinding<Tsp>;

std::vector<std::string> names2() { return {"a", "b"}; }

std::int64_t brute_force_tsp(const tsp::Instance& inst) {
    std::vector<int> perm(inst.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::int64_t best = INT64_MAX;
    do {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            sum += inst.cost(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[(i + 1) % perm.size()]));
        best = std::min(best, sum);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

} // namespace

TEST_CASE("configuration validation") {
    CmcsConfiguration id{names2(), {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
    CHECK_FALSE(configuration_error(id, names2()).has_value());
    CHECK(id.deterministic());

    CmcsConfiguration short_row{names2(), {{0.9, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
    auto e = configuration_error(short_row, names2());
    REQUIRE(e.has_value());
    CHECK(e->find("success row 1") != std::string::npos);
    CHECK_THROWS_AS(validate_configuration(short_row, names2()), ConfigError);

    CmcsConfiguration single{{"a"}, {{1}}, {{1}}};
    CHECK_FALSE(configuration_error(single, names2()).has_value());

    CmcsConfiguration unknown{{"a", "zzz"}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
    CHECK(configuration_error(unknown, names2())->find("zzz") != std::string::npos);

    CmcsConfiguration negative{names2(), {{1, 0}, {0, 1}}, {{1.5, -0.5}, {0, 1}}};
    CHECK(configuration_error(negative, names2())->find("failure row 1") != std::string::npos);

    CmcsConfiguration stochastic{names2(), {{0.5, 0.5}, {0, 1}}, {{1, 0}, {0, 1}}};
    CHECK_FALSE(configuration_error(stochastic, names2()).has_value());
    CHECK_FALSE(stochastic.deterministic());
}

TEST_CASE("select_next") {
    Rng rng(1);
    CmcsConfiguration det{names2(), {{0, 1}, {1, 0}}, {{1, 0}, {1, 0}}};
    CHECK(select_next(0, true, det, rng) == 1);
    CHECK(select_next(0, false, det, rng) == 0);
    CHECK(rng.draws() == 0);

    CmcsConfiguration uniform{names2(), {{1, 0}, {1, 0}}, {{0.5, 0.5}, {0.5, 0.5}}};
    int ones = 0;
    for (int i = 0; i < 10000; ++i) ones += select_next(0, false, uniform, rng) == 1 ? 1 : 0;
    CHECK(std::abs(ones / 10000.0 - 0.5) <= 0.02);

    CmcsConfiguration single{{"a"}, {{1}}, {{1}}};
    for (int i = 0; i < 10; ++i) CHECK(select_next(0, i % 2 == 0, single, rng) == 0);
}

TEST_CASE("self-loop hill climb emulation") {
    auto cfg = emulate_metaheuristic("self-loop-hill-climb", "hc", "mut");
    CHECK(cfg.components == std::vector<std::string>{"hc", "mut"});
    CHECK(cfg.success == TransitionMatrix{{1, 0}, {1, 0}});
    CHECK(cfg.fail == TransitionMatrix{{0, 1}, {1, 0}});
    CHECK_FALSE(configuration_error(cfg, {"hc", "mut"}).has_value());
    CHECK(cfg.deterministic());
    CHECK_THROWS_AS(emulate_metaheuristic("tabu", "a", "b"), ConfigError);
}

TEST_CASE("configuration text round-trips exactly") {
    CmcsConfiguration cfg{{"hc100:tsp.reverse", "strong3:tsp.swap", "ruin_recreate"},
                          {{0.1, 0.2, 0.7}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {0, 0, 1}},
                          {{1, 0, 0}, {0, 1, 0}, {0.25, 0.25, 0.5}}};
    const auto text = write_configuration(cfg);
    CHECK(parse_configuration(text) == cfg);
    CHECK(write_configuration(parse_configuration(text)) == text);
    CHECK_THROWS_AS(parse_configuration("cmcs-configuration\ncomponents 2\na\nb\nsuccess\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_configuration("cmcs-configuration\ncomponents 1\na\nsuccess\nx\nfailure\n1\n"), ParseError);
}

TEST_CASE("run") {
    Rng r0(3);
    TspB b(generators::euclidean_tsp(12, r0));
    auto pool = build_pool(reference_mutations<Tsp>());
    auto cfg = emulate_metaheuristic("self-loop-hill-climb", "hc100:tsp.reverse", "strong3:tsp.swap");

    SUBCASE("zero iterations returns the initial random solution") {
        Rng rng(5), twin(5);
        auto res = run(cfg, pool, b, Budget::of_iterations(0), rng);
        CHECK(res.iterations == 0);
        CHECK(res.best_solution == b.random_solution(twin));
        auto timed = run(cfg, pool, b, Budget::millis(0), rng);
        CHECK(timed.iterations == 0);
    }
    SUBCASE("hill-climber self-loop trace is nonincreasing") {
        CmcsConfiguration hc{{"hc10:tsp.swap"}, {{1}}, {{1}}};
        Rng rng(6);
        auto res = run(hc, pool, b, Budget::of_iterations(200), rng, {true, true});
        REQUIRE(res.records.size() == 200);
        for (const auto& r : res.records) CHECK(r.after <= r.before);
        for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
            CHECK(res.objective_trace[i].second <= res.objective_trace[i - 1].second);
    }
    SUBCASE("first component is position 0 and best matches its solution") {
        Rng rng(7);
        auto res = run(cfg, pool, b, Budget::of_iterations(50), rng, {false, true});
        CHECK(res.records.front().component == "hc100:tsp.reverse");
        CHECK(res.best_objective == b.objective(res.best_solution));
        CHECK(b.check(res.best_solution).feasible);
        for (std::size_t i = 1; i < res.records.size(); ++i) {
            const auto& prev = res.records[i - 1];
            const auto expected = prev.component == "strong3:tsp.swap" || prev.improved ? "hc100:tsp.reverse"
                                                                                       : "strong3:tsp.swap";
            CHECK(res.records[i].component == expected);
            CHECK(prev.improved == (prev.after < prev.before));
        }
    }
    SUBCASE("iteration mode is reproducible") {
        Rng a(11), c(11);
        auto r1 = run(cfg, pool, b, Budget::of_iterations(300), a, {true, true});
        auto r2 = run(cfg, pool, b, Budget::of_iterations(300), c, {true, true});
        CHECK(r1.best_solution == r2.best_solution);
        CHECK(r1.objective_trace == r2.objective_trace);
        REQUIRE(r1.records.size() == r2.records.size());
        for (std::size_t i = 0; i < r1.records.size(); ++i)
            CHECK(format_trace_record(r1.records[i]) == format_trace_record(r2.records[i]));
    }
    SUBCASE("timed run respects the budget") {
        Rng rng(12);
        auto res = run(cfg, pool, b, Budget::millis(50), rng);
        CHECK(res.iterations > 0);
        CHECK(res.elapsed_ms <= 50 + 25);
    }
    SUBCASE("throwing component aborts naming it") {
        auto bad_pool = pool;
        bad_pool.add({"explode", [](auto&, const TspB&, Rng&, const Deadline&) { throw std::runtime_error("boom"); }});
        CmcsConfiguration bad{{"explode"}, {{1}}, {{1}}};
        Rng rng(1);
        try {
            (void)run(bad, bad_pool, b, Budget::of_iterations(3), rng);
            FAIL("expected a component failure");
        } catch (const ComponentFailure& e) {
            CHECK(e.component() == "explode");
            CHECK(std::string(e.what()).find("boom") != std::string::npos);
        }
    }
}

TEST_CASE("equal matrices make the component sequence independent of outcomes") {
    using B = TspB;
    ComponentPool<B> pool;
    pool.add({"rotate", [](auto& s, const B&, Rng&, const Deadline&) { std::rotate(s.begin(), s.begin() + 1, s.end()); }});
    pool.add({"flip", [](auto& s, const B&, Rng&, const Deadline&) { std::swap(s[0], s[1]); }});
    TransitionMatrix m{{0.3, 0.7}, {0.6, 0.4}};
    CmcsConfiguration cfg{{"rotate", "flip"}, m, m};
    Rng g1(1), g2(2);
    B x(generators::euclidean_tsp(9, g1)), y(generators::euclidean_tsp(9, g2));
    Rng a(40), c(40);
    auto r1 = run(cfg, pool, x, Budget::of_iterations(500), a, {false, true});
    auto r2 = run(cfg, pool, y, Budget::of_iterations(500), c, {false, true});
    std::size_t flags_differ = 0;
    for (std::size_t i = 0; i < r1.records.size(); ++i) {
        REQUIRE(r1.records[i].component == r2.records[i].component);
        if (r1.records[i].improved != r2.records[i].improved) ++flags_differ;
    }
    CHECK(flags_differ > 0);
}

TEST_CASE("seven-city TSP reaches the enumerated optimum") {
    Rng r0(70);
    auto inst = generators::euclidean_tsp(7, r0);
    const auto optimum = brute_force_tsp(inst);
    TspB b(inst);
    auto pool = build_pool(reference_mutations<Tsp>());
    const auto configs = enumerate_deterministic_configs(pool);
    int hits = 0;
    for (int seed = 0; seed < 20; ++seed) {
        Rng rng(derive_seed(700, static_cast<std::uint64_t>(seed)));
        const auto& cfg = configs[rng.index(configs.size())];
        auto res = run(cfg, pool, b, Budget::millis(1000), rng);
        REQUIRE(res.best_objective >= static_cast<double>(optimum));
        if (res.best_objective == static_cast<double>(optimum)) ++hits;
    }
    CHECK(hits >= 10);
}
