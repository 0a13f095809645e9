// SPDX-License-Identifier: Apache-2.0
#include "osgen/cmcs.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>

#include "osgen/problems/text.hpp"

namespace osgen {

namespace {

bool one_hot(const std::vector<double>& row) {
    std::size_t ones = 0;
    for (double v : row) {
        if (v == 1.0) ++ones;
        else if (v != 0.0) return false;
    }
    return ones == 1;
}

std::optional<std::string> matrix_error(const TransitionMatrix& m, std::string_view label, std::size_t k) {
    const std::string name(label);
    if (m.size() != k) return name + " matrix has " + std::to_string(m.size()) + " rows, expected " + std::to_string(k);
    for (std::size_t r = 0; r < k; ++r) {
        const auto where = name + " row " + std::to_string(r + 1);
        if (m[r].size() != k)
            return where + " has " + std::to_string(m[r].size()) + " entries, expected " + std::to_string(k);
        double sum = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const double v = m[r][c];
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                return where + " column " + std::to_string(c + 1) + ": entry " + std::to_string(v) + " outside [0, 1]";
            sum += v;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance) return where + " sums to " + std::to_string(sum) + ", expected 1";
    }
    return std::nullopt;
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return {buf.data(), ptr};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

bool CmcsConfiguration::deterministic() const noexcept {
    return std::all_of(success.begin(), success.end(), one_hot) && std::all_of(fail.begin(), fail.end(), one_hot);
}

std::optional<std::string> configuration_error(const CmcsConfiguration& config,
                                               const std::vector<std::string>& pool_names) {
    const std::size_t k = config.size();
    if (k == 0) return std::string("configuration lists no components");
    std::set<std::string_view> seen;
    for (const auto& name : config.components) {
        if (std::find(pool_names.begin(), pool_names.end(), name) == pool_names.end())
            return "unknown component '" + name + "'";
        if (!seen.insert(name).second) return "component '" + name + "' listed twice";
    }
    if (auto e = matrix_error(config.success, "success", k)) return e;
    if (auto e = matrix_error(config.fail, "failure", k)) return e;
    return std::nullopt;
}

void validate_configuration(const CmcsConfiguration& config, const std::vector<std::string>& pool_names) {
    if (auto e = configuration_error(config, pool_names)) throw ConfigError("invalid CMCS configuration: " + *e);
}

std::size_t select_next(std::size_t last, bool improved, const CmcsConfiguration& config, Rng& rng) {
    const auto& row = (improved ? config.success : config.fail)[last];
    if (one_hot(row)) return static_cast<std::size_t>(std::find(row.begin(), row.end(), 1.0) - row.begin());
    const double u = rng.uniform01();
    double acc = 0;
    std::size_t last_positive = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] <= 0) continue;
        acc += row[c];
        last_positive = c;
        if (u < acc) return c;
    }
    // Rounding left u above the accumulated sum.
    return last_positive;
}

CmcsConfiguration emulate_metaheuristic(std::string_view name, std::string first, std::string second) {
    if (name == "self-loop-hill-climb") {
        return {{std::move(first), std::move(second)}, {{1, 0}, {1, 0}}, {{0, 1}, {1, 0}}};
    }
    throw ConfigError("unknown metaheuristic pattern '" + std::string(name) + "'");
}

std::string write_configuration(const CmcsConfiguration& config) {
    std::string out = "cmcs-configuration\ncomponents " + std::to_string(config.size()) + "\n";
    for (const auto& c : config.components) out += c + "\n";
    auto put = [&](std::string_view label, const TransitionMatrix& m) {
        out += std::string(label) + "\n";
        for (const auto& row : m) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ' ';
                out += format_double(row[c]);
            }
            out += '\n';
        }
    };
    put("success", config.success);
    put("failure", config.fail);
    return out;
}

CmcsConfiguration parse_configuration(std::string_view text) {
    const auto all = text::split_lines(text);
    std::vector<text::Line> lines;
    for (const auto& l : all)
        if (!text::blank(l)) lines.push_back(l);
    std::size_t at = 0;
    auto next = [&](std::string_view what) -> const text::Line& {
        if (at >= lines.size()) throw ParseError(0, "configuration: missing " + std::string(what));
        return lines[at++];
    };
    auto expect = [&](std::string_view keyword) {
        const auto& l = next(keyword);
        if (trim(l.content) != keyword)
            throw ParseError(l.number, "expected '" + std::string(keyword) + "', got '" + std::string(l.content) + "'");
    };

    expect("cmcs-configuration");
    const auto& count_line = next("component count");
    auto count_text = trim(count_line.content);
    if (count_text.substr(0, 11) != "components ") throw ParseError(count_line.number, "expected 'components <k>'");
    const auto k = text::parse_single_int(text::Line{count_line.number, count_text.substr(11)}, "component count");
    if (k <= 0) throw ParseError(count_line.number, "component count must be positive");

    CmcsConfiguration config;
    for (std::int64_t i = 0; i < k; ++i) config.components.emplace_back(trim(next("component name").content));
    auto matrix = [&](std::string_view label) {
        expect(label);
        TransitionMatrix m;
        for (std::int64_t r = 0; r < k; ++r) {
            const auto& l = next("matrix row");
            std::vector<double> row;
            for (auto tok : text::tokens(l.content)) {
                double v = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc() || ptr != tok.data() + tok.size())
                    throw ParseError(l.number, "'" + std::string(tok) + "' is not a number");
                row.push_back(v);
            }
            if (row.size() != static_cast<std::size_t>(k))
                throw ParseError(l.number, "expected " + std::to_string(k) + " values, found " + std::to_string(row.size()));
            m.push_back(std::move(row));
        }
        return m;
    };
    config.success = matrix("success");
    config.fail = matrix("failure");
    if (at != lines.size()) throw ParseError(lines[at].number, "unexpected trailing content");
    return config;
}

std::string format_trace_record(const TraceRecord& r) {
    return std::to_string(r.iteration) + '\t' + r.component + '\t' + format_double(r.before) + '\t' +
           format_double(r.after) + '\t' + (r.improved ? "1" : "0") + '\t' + format_double(r.best);
}

} // namespace osgen
