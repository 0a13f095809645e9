// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osgen/cmcs.hpp"
#include "osgen/problems/ap.hpp"
#include "osgen/problems/etp.hpp"
#include "osgen/problems/gtsp.hpp"
#include "osgen/problems/tsp.hpp"

namespace osgen::bench {

/// Mean relative excess over best-known values in percent:
/// (1/n) * sum (f_i - b_i) / b_i * 100. Throws std::domain_error when a
/// b_i <= 0, std::invalid_argument on length mismatch or empty input.
double gap(const std::vector<double>& f, const std::vector<double>& b);

inline const std::vector<double> kDefaultBudgetsMs{100, 1000, 10000, 100000};

/// Instances up to this many cities get exact best-known values.
inline constexpr std::size_t kExactCityLimit = 10;

/// Exact optimum where a reference solver covers the instance: AP always,
/// TSP/GTSP up to kExactCityLimit cities, ETP never.
std::optional<std::int64_t> exact_best_known(const tsp::Instance& inst);
std::optional<std::int64_t> exact_best_known(const gtsp::Instance& inst);
std::optional<std::int64_t> exact_best_known(const ap::Instance& inst);
std::optional<std::int64_t> exact_best_known(const etp::Instance& inst);

/// Added to f and b before the gap: n_slots for ETP (objectives lie in
/// [-(n_slots - 1), 0]), zero elsewhere.
inline double objective_shift(const tsp::Instance&) { return 0; }
inline double objective_shift(const gtsp::Instance&) { return 0; }
inline double objective_shift(const ap::Instance&) { return 0; }
inline double objective_shift(const etp::Instance& inst) { return static_cast<double>(inst.n_slots); }

enum class Provenance { ExactOracle, BestFound };
[[nodiscard]] std::string_view to_string(Provenance p) noexcept;

/// Best-known objective per instance id. Exact entries are fixed; best-found
/// entries only ever decrease.
class BestKnownTable {
public:
    struct Entry {
        double value = 0;
        Provenance provenance = Provenance::BestFound;
    };

    void set_exact(const std::string& id, double value);
    /// Records a found objective; returns true when the entry improved.
    bool offer(const std::string& id, double value);
    [[nodiscard]] std::optional<Entry> find(const std::string& id) const;
    [[nodiscard]] const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

    /// CSV with header "instance,b,provenance".
    [[nodiscard]] std::string to_csv() const;
    static BestKnownTable from_csv(std::string_view text);
    /// Missing file reads as an empty table.
    static BestKnownTable load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

private:
    std::map<std::string, Entry> entries_;
};

struct BenchInstance {
    std::string id;
    std::optional<double> exact;
    double shift = 0;
};

/// Raw objective of one run; throwing marks the run unsolved.
using Solver = std::function<double(std::size_t instance_index, const Budget& budget, std::uint64_t seed)>;

struct BenchPlan {
    std::string solver_id;
    std::string problem;
    std::vector<Budget> budgets;
    std::vector<std::uint64_t> seeds{kDefaultSeed};
    unsigned threads = 1;
    /// Note in each header, e.g. the objective shift convention.
    std::string notes;
};

struct RunRecord {
    std::string instance;
    std::uint64_t seed = 0;
    bool solved = false;
    double f = 0; // raw objective
    double b = 0; // raw best-known
    double gap = 0;
    std::string error;
};

struct GapReport {
    std::string solver_id;
    std::string problem;
    Budget budget;
    std::vector<std::uint64_t> seeds;
    std::string notes;
    std::vector<RunRecord> records;
    /// Over solved runs; NaN when none are solved.
    double aggregate_gap = 0;
    std::size_t solved = 0;

    [[nodiscard]] double solved_fraction() const noexcept;
    /// "" when every run was solved, else e.g. "(86%)".
    [[nodiscard]] std::string solved_marker() const;
};

[[nodiscard]] std::string budget_label(const Budget& b);

/// One run per (budget, instance, seed). Best-found entries of `table` are
/// improved with every solved run before gaps are computed.
std::vector<GapReport> run_bench(const std::vector<BenchInstance>& instances, const Solver& solver,
                                 const BenchPlan& plan, BestKnownTable& table);

/// Metadata comment lines, the column row "instance,f,b,gap,solved,seed",
/// one row per run and a trailing summary comment.
std::string to_csv(const GapReport& report);

} // namespace osgen::bench
