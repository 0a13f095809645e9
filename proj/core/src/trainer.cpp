// SPDX-License-Identifier: Apache-2.0
#include "osgen/trainer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

namespace osgen {

namespace {

std::vector<double> one_hot_row(std::size_t k, std::size_t target) {
    std::vector<double> row(k, 0.0);
    row[target] = 1.0;
    return row;
}

std::vector<bool> reachable(const std::vector<std::vector<bool>>& arcs, std::size_t from, bool reverse) {
    const std::size_t k = arcs.size();
    std::vector<bool> seen(k, false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < k; ++v) {
            const bool arc = reverse ? arcs[v][u] : arcs[u][v];
            if (arc && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

std::string number(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return {buf.data(), ptr};
}

std::string matrix_cell(const TransitionMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) out += ';';
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (c) out += ',';
            out += number(m[r][c]);
        }
    }
    return out;
}

} // namespace

bool is_meaningful(const CmcsConfiguration& config) {
    const std::size_t k = config.size();
    if (k == 0) return false;
    std::vector<std::vector<bool>> arcs(k, std::vector<bool>(k, false));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) arcs[r][c] = config.success[r][c] > 0 || config.fail[r][c] > 0;
    const auto forward = reachable(arcs, 0, false);
    const auto backward = reachable(arcs, 0, true);
    for (std::size_t i = 0; i < k; ++i)
        if (!forward[i] || !backward[i]) return false;
    return true;
}

std::vector<CmcsConfiguration> enumerate_deterministic_configs(const std::vector<std::string>& pool_names) {
    if (pool_names.size() < 2) throw ConfigError("enumeration needs a pool of at least two components");
    std::vector<CmcsConfiguration> out;
    for (std::size_t a = 0; a < pool_names.size(); ++a) {
        for (std::size_t b = a + 1; b < pool_names.size(); ++b) {
            // Bits of `code`, high to low: success row 0, success row 1, failure row 0, failure row 1.
            for (unsigned code = 0; code < 16; ++code) {
                CmcsConfiguration cfg;
                cfg.components = {pool_names[a], pool_names[b]};
                cfg.success = {one_hot_row(2, (code >> 3) & 1u), one_hot_row(2, (code >> 2) & 1u)};
                cfg.fail = {one_hot_row(2, (code >> 1) & 1u), one_hot_row(2, code & 1u)};
                if (is_meaningful(cfg)) out.push_back(std::move(cfg));
            }
        }
    }
    return out;
}

std::vector<double> average_ranks(const std::vector<Objective>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<double> ranks(values.size(), 0.0);
    for (std::size_t lo = 0; lo < order.size();) {
        std::size_t hi = lo;
        while (hi + 1 < order.size() && values[order[hi + 1]] == values[order[lo]]) ++hi;
        // Positions lo..hi hold rank lo+1 .. hi+1.
        const double shared = (static_cast<double>(lo + 1) + static_cast<double>(hi + 1)) / 2.0;
        for (std::size_t p = lo; p <= hi; ++p) ranks[order[p]] = shared;
        lo = hi + 1;
    }
    return ranks;
}

TrainingReport rank_and_select(EvaluationTable table) {
    const std::size_t n_cfg = table.objectives.size();
    if (n_cfg == 0) throw ConfigError("empty evaluation table");
    const std::size_t n_inst = table.objectives.front().size();
    TrainingReport report;
    report.ranks.assign(n_cfg, std::vector<double>(n_inst, 0.0));
    report.total_ranks.assign(n_cfg, 0.0);
    std::vector<Objective> column(n_cfg);
    for (std::size_t i = 0; i < n_inst; ++i) {
        for (std::size_t c = 0; c < n_cfg; ++c) column[c] = table.objectives[c].at(i);
        const auto r = average_ranks(column);
        for (std::size_t c = 0; c < n_cfg; ++c) {
            report.ranks[c][i] = r[c];
            report.total_ranks[c] += r[c];
        }
    }
    report.winner_index = static_cast<std::size_t>(
        std::min_element(report.total_ranks.begin(), report.total_ranks.end()) - report.total_ranks.begin());
    report.table = std::move(table);
    return report;
}

std::vector<std::size_t> sample_training_instances(std::size_t available, std::size_t max_count, std::uint64_t seed) {
    std::vector<std::size_t> idx(available);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (available <= max_count) return idx;
    Rng rng(derive_seed(seed, 0x7472616eULL));
    rng.shuffle(std::span<std::size_t>(idx));
    idx.resize(max_count);
    return idx;
}

std::string write_training_report(const TrainingReport& report) {
    const auto& t = report.table;
    std::string out = "#\tcomponents\tsuccess\tfailure";
    for (const auto& label : t.instance_labels) out += '\t' + label;
    out += "\ttotal_rank\n";
    for (std::size_t c = 0; c < t.configs.size(); ++c) {
        const auto& cfg = t.configs[c];
        std::string names;
        for (std::size_t i = 0; i < cfg.components.size(); ++i) names += (i ? "|" : "") + cfg.components[i];
        out += std::to_string(c + 1) + (c == report.winner_index ? "*" : "") + '\t' + names + '\t' +
               matrix_cell(cfg.success) + '\t' + matrix_cell(cfg.fail);
        for (Objective v : t.objectives[c]) out += '\t' + number(v);
        out += '\t' + number(report.total_ranks[c]) + '\n';
    }
    return out;
}

} // namespace osgen
