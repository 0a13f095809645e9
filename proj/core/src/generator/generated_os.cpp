// SPDX-License-Identifier: Apache-2.0
#include "osgen/generator/generated_os.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "osgen/error.hpp"

namespace osgen::generator {

namespace fs = std::filesystem;
using nlohmann::json;
using validation::UnitKind;

namespace {

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    out << text;
}

std::string_view unit_kind_name(UnitKind k) {
    switch (k) {
    case UnitKind::Instance: return "instance";
    case UnitKind::Solution: return "solution";
    case UnitKind::Algorithm: return "algorithm";
    case UnitKind::Mutation: return "mutation";
    }
    return "";
}

UnitKind parse_unit_kind(const std::string& s) {
    if (s == "instance") return UnitKind::Instance;
    if (s == "solution") return UnitKind::Solution;
    if (s == "algorithm") return UnitKind::Algorithm;
    if (s == "mutation") return UnitKind::Mutation;
    throw ConfigError("manifest: unknown unit kind '" + s + "'");
}

} // namespace

std::string_view to_string(GeneratorKind kind) noexcept {
    switch (kind) {
    case GeneratorKind::Free: return "Free";
    case GeneratorKind::SA: return "SA";
    case GeneratorKind::TS: return "TS";
    case GeneratorKind::ILS: return "ILS";
    case GeneratorKind::MIP: return "MIP";
    case GeneratorKind::CMCS: return "CMCS";
    }
    return "";
}

GeneratorKind parse_generator_kind(std::string_view name) {
    std::string up;
    for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (auto k : {GeneratorKind::Free, GeneratorKind::SA, GeneratorKind::TS, GeneratorKind::ILS, GeneratorKind::MIP,
                   GeneratorKind::CMCS}) {
        std::string label(to_string(k));
        std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::toupper(c); });
        if (label == up) return k;
    }
    throw ConfigError("unknown generator kind '" + std::string(name) + "' (Free, SA, TS, ILS, MIP, CMCS)");
}

std::string GeneratedUnit::name() const {
    return kind == UnitKind::Mutation ? validation::class_name(kind, mutation_index) : std::string(unit_kind_name(kind));
}

std::vector<UnitSource> GeneratedOs::unit_sources() const {
    std::vector<UnitSource> out;
    for (const auto& u : units) out.push_back({u.name(), u.source});
    return out;
}

std::vector<std::string> GeneratedOs::mutation_classes() const {
    std::vector<std::string> out;
    for (const auto& u : units)
        if (u.kind == UnitKind::Mutation) out.push_back(u.name());
    return out;
}

bool GeneratedOs::has_algorithm_unit() const {
    return std::any_of(units.begin(), units.end(), [](const GeneratedUnit& u) { return u.kind == UnitKind::Algorithm; });
}

void save_generated_os(const GeneratedOs& os, const fs::path& dir) {
    fs::create_directories(dir / "units");
    json units = json::array();
    for (const auto& u : os.units) {
        const auto file = "units/" + u.name() + ".py";
        write_text(dir / file, u.source);
        units.push_back({{"name", u.name()},
                         {"kind", unit_kind_name(u.kind)},
                         {"mutation_index", u.mutation_index},
                         {"file", file},
                         {"origin", u.origin}});
    }
    json manifest{{"format", 1}, {"kind", to_string(os.kind)}, {"units", units}};
    if (os.configuration) {
        write_text(dir / "configuration.txt", write_configuration(*os.configuration));
        manifest["configuration"] = "configuration.txt";
    }
    if (!os.training_report.empty()) {
        write_text(dir / "training_report.tsv", os.training_report);
        manifest["training_report"] = "training_report.tsv";
    }
    std::string reports;
    for (const auto& r : os.validation) reports += validation::to_jsonl(r);
    write_text(dir / "validation.jsonl", reports);
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

GeneratedOs load_generated_os(const fs::path& dir) {
    json manifest;
    try {
        manifest = json::parse(read_text(dir / "manifest.json"));
    } catch (const json::parse_error& e) {
        throw ConfigError("manifest.json is not valid JSON: " + std::string(e.what()));
    }
    GeneratedOs os;
    try {
        os.kind = parse_generator_kind(manifest.at("kind").get<std::string>());
        for (const auto& u : manifest.at("units")) {
            GeneratedUnit unit;
            unit.kind = parse_unit_kind(u.at("kind").get<std::string>());
            unit.mutation_index = u.value("mutation_index", 0);
            unit.origin = u.value("origin", std::size_t{0});
            unit.source = read_text(dir / u.at("file").get<std::string>());
            os.units.push_back(std::move(unit));
        }
    } catch (const json::exception& e) {
        throw ConfigError("manifest.json: " + std::string(e.what()));
    }
    if (manifest.contains("configuration"))
        os.configuration = parse_configuration(read_text(dir / manifest["configuration"].get<std::string>()));
    if (manifest.contains("training_report"))
        os.training_report = read_text(dir / manifest["training_report"].get<std::string>());
    if (os.kind == GeneratorKind::CMCS && !os.configuration)
        throw ConfigError("CMCS system in " + dir.string() + " has no configuration.txt");
    if (os.kind != GeneratorKind::CMCS && !os.has_algorithm_unit())
        throw ConfigError("system in " + dir.string() + " has no algorithm unit");
    return os;
}

std::unique_ptr<HostedSession> open_session(const GeneratedOs& os, const HostConfig& host) {
    return std::make_unique<HostedSession>(host, os.unit_sources(), os.mutation_classes(), os.has_algorithm_unit());
}

std::string solve_with(const GeneratedOs& os, OsSession& session, double budget_ms, std::uint64_t seed) {
    if (os.kind != GeneratorKind::CMCS) return session.run_algorithm(budget_ms, seed).solution;
    if (!os.configuration) throw ConfigError("CMCS system without a configuration");
    const auto pool = build_pool(session_mutations(session));
    Rng rng(seed);
    return run(*os.configuration, pool, SessionBinding(session), Budget::millis(budget_ms), rng).best_solution;
}

} // namespace osgen::generator
