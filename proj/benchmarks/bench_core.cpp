// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "osgen/bench.hpp"
#include "osgen/exact.hpp"
#include "osgen/problems/generators.hpp"
#include "osgen/reference_solver.hpp"
#include "osgen/trainer.hpp"

namespace {

using namespace osgen;

template <Problem P>
NativeBinding<P> make_binding(std::size_t n, Rng& rng) {
    if constexpr (std::is_same_v<P, Tsp>) return NativeBinding<P>(generators::euclidean_tsp(n, rng));
    else if constexpr (std::is_same_v<P, Gtsp>) return NativeBinding<P>(generators::euclidean_gtsp(n, n / 4, rng));
    else if constexpr (std::is_same_v<P, Ap>) return NativeBinding<P>(generators::uniform_ap(n, 99, rng));
    else return NativeBinding<P>(generators::etp_instances(1).at(std::min<std::size_t>(9, n / 10)));
}

template <Problem P>
void BM_Evaluate(benchmark::State& state) {
    Rng rng(1);
    const auto b = make_binding<P>(static_cast<std::size_t>(state.range(0)), rng);
    const auto s = b.random_solution(rng);
    for (auto _ : state) benchmark::DoNotOptimize(b.objective(s));
}
BENCHMARK(BM_Evaluate<Tsp>)->Arg(100)->Arg(500);
BENCHMARK(BM_Evaluate<Gtsp>)->Arg(100)->Arg(500);
BENCHMARK(BM_Evaluate<Ap>)->Arg(100);
BENCHMARK(BM_Evaluate<Etp>)->Arg(100);

template <Problem P>
void BM_Mutation(benchmark::State& state) {
    Rng rng(2);
    const auto b = make_binding<P>(100, rng);
    const auto muts = reference_mutations<P>();
    const auto& m = muts.at(static_cast<std::size_t>(state.range(0)));
    auto s = b.random_solution(rng);
    for (auto _ : state) {
        m.apply(s, b, rng, Deadline::never());
        benchmark::ClobberMemory();
    }
    state.SetLabel(m.name);
}
BENCHMARK(BM_Mutation<Tsp>)->Arg(0)->Arg(1);
BENCHMARK(BM_Mutation<Ap>)->Arg(0)->Arg(1);

void BM_ReferenceSolveTsp(benchmark::State& state) {
    Rng rng(3);
    const auto b = make_binding<Tsp>(50, rng);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_reference(b, Budget::of_iterations(state.range(0)), ++seed).best_objective);
}
BENCHMARK(BM_ReferenceSolveTsp)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ExactAp(benchmark::State& state) {
    Rng rng(4);
    const auto inst = generators::uniform_ap(static_cast<std::size_t>(state.range(0)), 99, rng);
    for (auto _ : state) benchmark::DoNotOptimize(exact::solve_ap(inst).optimum.objective);
}
BENCHMARK(BM_ExactAp)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_ExactTsp(benchmark::State& state) {
    Rng rng(5);
    const auto inst = generators::euclidean_tsp(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(exact::solve_tsp(inst).objective);
}
BENCHMARK(BM_ExactTsp)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_EnumerateConfigurations(benchmark::State& state) {
    const auto names = reference_pool<Tsp>().names();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_deterministic_configs(names).size());
}
BENCHMARK(BM_EnumerateConfigurations)->Unit(benchmark::kMillisecond);

void BM_Gap(benchmark::State& state) {
    std::vector<double> f(1000), b(1000);
    for (std::size_t i = 0; i < f.size(); ++i) {
        b[i] = 100.0 + static_cast<double>(i);
        f[i] = b[i] * 1.05;
    }
    for (auto _ : state) benchmark::DoNotOptimize(bench::gap(f, b));
}
BENCHMARK(BM_Gap);

} // namespace

BENCHMARK_MAIN();
