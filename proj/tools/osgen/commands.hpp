// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "osgen/rng.hpp"

namespace osgen::cli {

namespace fs = std::filesystem;

/// Options shared by every command.
struct Common {
    std::optional<fs::path> config;
    /// Problem name; inferred from the description's directory when empty.
    std::string problem;
};

struct DescribeCheckArgs {
    fs::path description;
};

struct GenerateArgs {
    fs::path description;
    std::string kind = "CMCS";
    std::string backend;
    fs::path script;
    std::string endpoint;
    std::string model;
    std::optional<double> temperature;
    fs::path out;
    std::uint64_t seed = kDefaultSeed;
    std::optional<double> validation_budget_ms;
    std::optional<double> training_budget_ms;
    std::optional<std::size_t> training_instances;
    std::optional<unsigned> threads;
};

struct TrainArgs {
    fs::path description;
    double budget_ms = 1000;
    std::optional<std::uint64_t> iterations;
    std::uint64_t seed = kDefaultSeed;
    std::size_t max_instances = 5;
    unsigned threads = 1;
    fs::path out = "configuration.txt";
    fs::path report;
};

struct SolveArgs {
    fs::path description;
    fs::path instance;
    double budget_ms = 1000;
    std::optional<std::uint64_t> iterations;
    std::uint64_t seed = kDefaultSeed;
    std::string solver = "native";
    fs::path configuration;
    fs::path out = "solution.txt";
};

struct ValidateArgs {
    fs::path description;
    std::string solver = "native";
    double budget_ms = 1000;
    std::uint64_t seed = kDefaultSeed;
    std::size_t mutation_trials = 100;
    fs::path report;
};

struct BenchArgs {
    fs::path description;
    std::vector<fs::path> instances;
    std::string solver = "native";
    std::vector<double> budgets_ms{100, 1000, 10000, 100000};
    std::optional<std::uint64_t> iterations;
    std::vector<std::uint64_t> seeds{kDefaultSeed};
    unsigned threads = 1;
    fs::path best_known;
    fs::path out_dir = "bench";
};

struct MakeInstancesArgs {
    std::uint64_t seed = kDefaultSeed;
    fs::path out = ".";
};

int describe_check(const Common& common, const DescribeCheckArgs& args);
int generate(const Common& common, const GenerateArgs& args);
int train(const Common& common, const TrainArgs& args);
int solve(const Common& common, const SolveArgs& args);
int validate(const Common& common, const ValidateArgs& args);
int bench(const Common& common, const BenchArgs& args);
int make_instances(const Common& common, const MakeInstancesArgs& args);

} // namespace osgen::cli
