// SPDX-License-Identifier: Apache-2.0
#include "osgen/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "osgen/error.hpp"
#include "osgen/exact.hpp"
#include "osgen/problems/text.hpp"

namespace osgen::bench {

namespace {

std::string number(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return {buf.data(), ptr};
}

std::string fixed(double v, int digits) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, digits);
    (void)ec;
    return {buf.data(), ptr};
}

} // namespace

double gap(const std::vector<double>& f, const std::vector<double>& b) {
    if (f.size() != b.size()) throw std::invalid_argument("gap: f and b differ in length");
    if (f.empty()) throw std::invalid_argument("gap: no values");
    double sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(b[i] > 0)) throw std::domain_error("gap: best-known value " + number(b[i]) + " is not positive");
        sum += (f[i] - b[i]) / b[i];
    }
    return sum / static_cast<double>(f.size()) * 100.0;
}

std::optional<std::int64_t> exact_best_known(const tsp::Instance& inst) {
    if (inst.size() > kExactCityLimit) return std::nullopt;
    return exact::solve_tsp(inst).objective;
}

std::optional<std::int64_t> exact_best_known(const gtsp::Instance& inst) {
    if (inst.n_cities > kExactCityLimit) return std::nullopt;
    return exact::solve_gtsp(inst).objective;
}

std::optional<std::int64_t> exact_best_known(const ap::Instance& inst) { return exact::solve_ap(inst).optimum.objective; }

std::optional<std::int64_t> exact_best_known(const etp::Instance&) { return std::nullopt; }

std::string_view to_string(Provenance p) noexcept { return p == Provenance::ExactOracle ? "exact-oracle" : "best-found"; }

void BestKnownTable::set_exact(const std::string& id, double value) { entries_[id] = {value, Provenance::ExactOracle}; }

bool BestKnownTable::offer(const std::string& id, double value) {
    auto it = entries_.find(id);
    if (it == entries_.end()) {
        entries_.emplace(id, Entry{value, Provenance::BestFound});
        return true;
    }
    if (it->second.provenance == Provenance::ExactOracle || value >= it->second.value) return false;
    it->second.value = value;
    return true;
}

std::optional<BestKnownTable::Entry> BestKnownTable::find(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string BestKnownTable::to_csv() const {
    std::string out = "instance,b,provenance\n";
    for (const auto& [id, e] : entries_) out += id + "," + number(e.value) + "," + std::string(to_string(e.provenance)) + "\n";
    return out;
}

BestKnownTable BestKnownTable::from_csv(std::string_view text) {
    BestKnownTable t;
    const auto lines = text::split_lines(text);
    bool header = true;
    for (const auto& l : lines) {
        if (text::blank(l)) continue;
        if (header) {
            if (l.content != "instance,b,provenance") throw ParseError(l.number, "expected header 'instance,b,provenance'");
            header = false;
            continue;
        }
        const auto c1 = l.content.find(',');
        const auto c2 = l.content.rfind(',');
        if (c1 == std::string_view::npos || c1 == c2) throw ParseError(l.number, "expected 3 fields");
        const std::string id(l.content.substr(0, c1));
        const auto vtext = l.content.substr(c1 + 1, c2 - c1 - 1);
        double v = 0;
        auto [ptr, ec] = std::from_chars(vtext.data(), vtext.data() + vtext.size(), v);
        if (ec != std::errc() || ptr != vtext.data() + vtext.size())
            throw ParseError(l.number, "'" + std::string(vtext) + "' is not a number");
        const auto prov = l.content.substr(c2 + 1);
        if (prov == "exact-oracle") t.set_exact(id, v);
        else if (prov == "best-found") t.offer(id, v);
        else throw ParseError(l.number, "unknown provenance '" + std::string(prov) + "'");
    }
    return t;
}

BestKnownTable BestKnownTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_csv(ss.str());
}

void BestKnownTable::save(const std::filesystem::path& path) const {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << to_csv();
}

double GapReport::solved_fraction() const noexcept {
    return records.empty() ? 0.0 : 100.0 * static_cast<double>(solved) / static_cast<double>(records.size());
}

std::string GapReport::solved_marker() const {
    if (solved == records.size()) return "";
    return "(" + std::to_string(static_cast<long long>(std::floor(solved_fraction()))) + "%)";
}

std::string budget_label(const Budget& b) {
    if (b.timed()) return number(std::chrono::duration<double, std::milli>(b.time).count()) + "ms";
    return std::to_string(b.iterations) + "it";
}

std::vector<GapReport> run_bench(const std::vector<BenchInstance>& instances, const Solver& solver,
                                 const BenchPlan& plan, BestKnownTable& table) {
    if (instances.empty()) throw ConfigError("bench needs at least one instance");
    if (plan.budgets.empty()) throw ConfigError("bench needs at least one budget");
    if (plan.seeds.empty()) throw ConfigError("bench needs at least one seed");
    const std::size_t nb = plan.budgets.size(), ni = instances.size(), ns = plan.seeds.size();
    const std::size_t cells = nb * ni * ns;
    std::vector<RunRecord> runs(cells);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t cell = next++; cell < cells; cell = next++) {
            const std::size_t bi = cell / (ni * ns), ii = (cell / ns) % ni, si = cell % ns;
            auto& r = runs[cell];
            r.instance = instances[ii].id;
            r.seed = plan.seeds[si];
            try {
                r.f = solver(ii, plan.budgets[bi], r.seed);
                r.solved = std::isfinite(r.f);
                if (!r.solved) r.error = "non-finite objective";
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };
    if (plan.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < plan.threads; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    for (const auto& inst : instances)
        if (inst.exact) table.set_exact(inst.id, *inst.exact);
    for (const auto& r : runs)
        if (r.solved) table.offer(r.instance, r.f);

    std::vector<GapReport> reports;
    for (std::size_t bi = 0; bi < nb; ++bi) {
        GapReport rep{plan.solver_id, plan.problem, plan.budgets[bi], plan.seeds, plan.notes, {}, 0, 0};
        std::vector<double> f, b;
        for (std::size_t ii = 0; ii < ni; ++ii) {
            const auto entry = table.find(instances[ii].id);
            for (std::size_t si = 0; si < ns; ++si) {
                auto r = runs[(bi * ni + ii) * ns + si];
                if (entry) r.b = entry->value;
                if (r.solved && entry) {
                    const double shift = instances[ii].shift;
                    r.gap = gap({r.f + shift}, {r.b + shift});
                    f.push_back(r.f + shift);
                    b.push_back(r.b + shift);
                    ++rep.solved;
                } else {
                    r.solved = false;
                }
                rep.records.push_back(std::move(r));
            }
        }
        rep.aggregate_gap = f.empty() ? std::numeric_limits<double>::quiet_NaN() : gap(f, b);
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::string to_csv(const GapReport& r) {
    std::string out = "# osgen-bench-csv v1\n";
    out += "# solver: " + r.solver_id + "\n";
    out += "# problem: " + r.problem + "\n";
    out += "# budget: " + budget_label(r.budget) + "\n";
    out += "# seeds:";
    for (auto s : r.seeds) out += " " + std::to_string(s);
    out += "\n";
    if (!r.notes.empty()) out += "# notes: " + r.notes + "\n";
    out += "instance,f,b,gap,solved,seed\n";
    for (const auto& rec : r.records) {
        out += rec.instance + ",";
        out += rec.solved ? number(rec.f) : "";
        out += "," + number(rec.b) + ",";
        out += rec.solved ? fixed(rec.gap, 6) : "";
        out += std::string(",") + (rec.solved ? "1" : "0") + "," + std::to_string(rec.seed) + "\n";
    }
    out += "# summary: gap=" + (r.solved ? fixed(r.aggregate_gap, 6) + "%" : std::string("n/a")) + " solved=" +
           std::to_string(r.solved) + "/" + std::to_string(r.records.size());
    const auto marker = r.solved_marker();
    if (!marker.empty()) out += " " + marker;
    out += "\n";
    return out;
}

} // namespace osgen::bench
