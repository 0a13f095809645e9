// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "osgen/cmcs.hpp"

namespace osgen {

/// Every one-hot 2x2 (success, failure) matrix pair over each unordered pair
/// of pool components, keeping only meaningful ones. Pairs follow pool order,
/// matrices follow (s0, s1, f0, f1) lexicographic order of their targets.
std::vector<CmcsConfiguration> enumerate_deterministic_configs(const std::vector<std::string>& pool_names);

template <Binding B>
std::vector<CmcsConfiguration> enumerate_deterministic_configs(const ComponentPool<B>& pool) {
    return enumerate_deterministic_configs(pool.names());
}

/// Meaningful: in the graph whose arcs are the non-zero entries of either
/// matrix, every component is reachable from position 0 and can reach it
/// again, so none is dead or executed at most once.
bool is_meaningful(const CmcsConfiguration& config);

struct TrainingPlan {
    std::size_t max_instances = 5;
    Budget budget = Budget::millis(1000);
    std::uint64_t seed = kDefaultSeed;
    /// Concurrent evaluations; bindings must tolerate it when above 1.
    unsigned threads = 1;
};

/// Objectives indexed [config][instance]; aborted runs hold +infinity and
/// the failure text in `errors`.
struct EvaluationTable {
    std::vector<CmcsConfiguration> configs;
    std::vector<std::string> instance_labels;
    std::vector<std::vector<Objective>> objectives;
    std::vector<std::vector<std::string>> errors;
};

struct TrainingReport {
    EvaluationTable table;
    std::vector<std::vector<double>> ranks; // [config][instance]
    std::vector<double> total_ranks;
    std::size_t winner_index = 0;

    [[nodiscard]] const CmcsConfiguration& winner() const { return table.configs.at(winner_index); }
};

/// Ascending ranks from 1, tied values share the mean of their positions.
std::vector<double> average_ranks(const std::vector<Objective>& values);

/// Ranks per instance, sums per configuration, minimal total wins with ties
/// going to the earliest configuration.
TrainingReport rank_and_select(EvaluationTable table);

/// Picks min(max_count, available) distinct indices uniformly at random.
std::vector<std::size_t> sample_training_instances(std::size_t available, std::size_t max_count, std::uint64_t seed);

/// One run per (configuration, instance) seeded with
/// derive_seed(plan.seed, config index, instance index).
template <Binding B>
EvaluationTable evaluate_configurations(std::vector<CmcsConfiguration> configs, const ComponentPool<B>& pool,
                                        const std::vector<B>& instances, const std::vector<std::string>& labels,
                                        const TrainingPlan& plan) {
    if (configs.empty()) throw ConfigError("no configurations to evaluate");
    if (instances.empty()) throw ConfigError("no training instances");
    EvaluationTable table;
    table.configs = std::move(configs);
    table.instance_labels = labels;
    table.instance_labels.resize(instances.size());
    const std::size_t n_cfg = table.configs.size();
    const std::size_t n_inst = instances.size();
    table.objectives.assign(n_cfg, std::vector<Objective>(n_inst, kWorstObjective));
    table.errors.assign(n_cfg, std::vector<std::string>(n_inst));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t cell = next++; cell < n_cfg * n_inst; cell = next++) {
            const std::size_t c = cell / n_inst;
            const std::size_t i = cell % n_inst;
            Rng rng(derive_seed(plan.seed, c, i));
            try {
                table.objectives[c][i] = run(table.configs[c], pool, instances[i], plan.budget, rng).best_objective;
            } catch (const std::exception& e) {
                table.errors[c][i] = e.what();
            }
        }
    };
    const unsigned threads = std::max(1u, plan.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool_threads;
        for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(worker);
        for (auto& t : pool_threads) t.join();
    }
    return table;
}

/// Samples training instances, enumerates, evaluates and ranks.
template <Binding B>
TrainingReport train(const ComponentPool<B>& pool, const std::vector<B>& available,
                     const std::vector<std::string>& labels, const TrainingPlan& plan) {
    if (available.empty()) throw ConfigError("training needs at least one instance");
    if (pool.size() < 2) throw ConfigError("training needs a pool of at least two components");
    std::vector<B> chosen;
    std::vector<std::string> chosen_labels;
    for (std::size_t idx : sample_training_instances(available.size(), plan.max_instances, plan.seed)) {
        chosen.push_back(available[idx]);
        chosen_labels.push_back(idx < labels.size() ? labels[idx] : "instance" + std::to_string(idx + 1));
    }
    return rank_and_select(
        evaluate_configurations(enumerate_deterministic_configs(pool), pool, chosen, chosen_labels, plan));
}

/// Tab-separated table: index, components, success and failure matrices,
/// per-instance objectives, total rank; the winner row is marked with '*'.
std::string write_training_report(const TrainingReport& report);

} // namespace osgen
