// SPDX-License-Identifier: Apache-2.0
#include "osgen/description.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

#include "osgen/error.hpp"
#include "osgen/problems/text.hpp"

namespace fs = std::filesystem;

namespace osgen {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// "### Name ###" -> "Name".
std::optional<std::string_view> header_name(std::string_view line) {
    line = trim(line);
    if (line.size() < 7 || line.substr(0, 3) != "###" || line.substr(line.size() - 3) != "###") return std::nullopt;
    auto inner = trim(line.substr(3, line.size() - 6));
    if (inner.empty()) return std::nullopt;
    return inner;
}

std::string trim_blank_lines(std::string_view body) {
    // Strip leading and trailing whitespace-only content, keep inner text verbatim.
    return std::string(trim(body));
}

fs::path resolve(const fs::path& base_dir, std::string_view rel) {
    fs::path p(std::string(trim(rel)));
    if (p.is_relative()) p = base_dir / p;
    p = p.lexically_normal();
    if (!fs::exists(p)) throw IoError("referenced file does not exist: " + p.string());
    return p;
}

ExampleCase parse_example(const std::string& name, std::string_view body, const fs::path& base_dir) {
    std::optional<fs::path> instance;
    std::optional<fs::path> solution;
    std::optional<double> objective;
    for (const auto& line : text::split_lines(body)) {
        if (text::blank(line)) continue;
        auto content = trim(line.content);
        auto colon = content.find(':');
        if (colon == std::string_view::npos) throw SchemaError(name, name + ": expected 'key: value', got '" + std::string(content) + "'");
        auto key = trim(content.substr(0, colon));
        auto value = trim(content.substr(colon + 1));
        if (key == "Instance") {
            instance = resolve(base_dir, value);
        } else if (key == "Solution") {
            solution = resolve(base_dir, value);
        } else if (key == "Objective value") {
            double v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v))
                throw SchemaError(name, name + ": objective value '" + std::string(value) + "' is not a finite number");
            objective = v;
        } else {
            throw SchemaError(name, name + ": unknown field '" + std::string(key) + "'");
        }
    }
    if (!instance) throw SchemaError(name, name + ": missing 'Instance:'");
    if (!solution) throw SchemaError(name, name + ": missing 'Solution:'");
    if (!objective) throw SchemaError(name, name + ": missing 'Objective value:'");
    return {*instance, *solution, *objective};
}

} // namespace

ProblemDescription parse_problem_description(std::string_view text, const fs::path& base_dir) {
    struct Section {
        std::string name;
        std::string body;
    };
    std::vector<Section> sections;
    for (const auto& line : text::split_lines(text)) {
        if (auto name = header_name(line.content)) {
            sections.push_back({std::string(*name), {}});
            continue;
        }
        if (sections.empty()) {
            if (!text::blank(line)) throw SchemaError("", "line " + std::to_string(line.number) + ": text before the first section header");
            continue;
        }
        sections.back().body.append(line.content);
        sections.back().body.push_back('\n');
    }

    ProblemDescription desc;
    const std::array<std::pair<std::string_view, std::string*>, 6> text_sections{{
        {section::kInputData, &desc.input_data},
        {section::kSolution, &desc.solution},
        {section::kConstraints, &desc.constraints},
        {section::kObjectiveFunction, &desc.objective_function},
        {section::kInstanceFileFormat, &desc.instance_file_format},
        {section::kSolutionFileFormat, &desc.solution_file_format},
    }};
    std::map<std::string, bool> seen;
    std::map<long, ExampleCase> examples;

    for (auto& sec : sections) {
        if (seen[sec.name]) throw SchemaError(sec.name, "duplicate section '" + sec.name + "'");
        seen[sec.name] = true;
        bool matched = false;
        for (auto& [name, field] : text_sections) {
            if (sec.name == name) {
                *field = trim_blank_lines(sec.body);
                if (field->empty()) throw SchemaError(sec.name, "section '" + sec.name + "' is empty");
                matched = true;
            }
        }
        if (matched) continue;
        if (sec.name == section::kTrainingInstances) {
            for (const auto& line : text::split_lines(sec.body))
                if (!text::blank(line)) desc.training_instances.push_back(resolve(base_dir, line.content));
            continue;
        }
        if (sec.name.rfind(section::kExamplePrefix, 0) == 0) {
            auto index_text = trim(std::string_view(sec.name).substr(section::kExamplePrefix.size()));
            long index = 0;
            auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
            if (ec != std::errc() || ptr != index_text.data() + index_text.size() || index < 1)
                throw SchemaError(sec.name, "example section must be named 'Example <i>' with i >= 1");
            examples.emplace(index, parse_example(sec.name, sec.body, base_dir));
            continue;
        }
        throw SchemaError(sec.name, "unknown section '" + sec.name + "'");
    }
    for (auto& [name, field] : text_sections)
        if (!seen[std::string(name)]) throw SchemaError(std::string(name), "missing mandatory section '" + std::string(name) + "'");
    for (auto& [_, ex] : examples) desc.examples.push_back(std::move(ex));
    return desc;
}

ProblemDescription load_problem_description(const fs::path& file) {
    return parse_problem_description(text::read_file(file.string()), file.parent_path());
}

std::string write_problem_description(const ProblemDescription& desc, const fs::path& base_dir) {
    std::string out;
    auto put = [&](std::string_view name, const std::string& body) {
        out += "### " + std::string(name) + " ###\n" + body + "\n\n";
    };
    put(section::kInputData, desc.input_data);
    put(section::kSolution, desc.solution);
    put(section::kConstraints, desc.constraints);
    put(section::kObjectiveFunction, desc.objective_function);
    put(section::kInstanceFileFormat, desc.instance_file_format);
    put(section::kSolutionFileFormat, desc.solution_file_format);
    auto rel = [&](const fs::path& p) { return p.lexically_relative(base_dir).generic_string(); };
    for (std::size_t i = 0; i < desc.examples.size(); ++i) {
        const auto& ex = desc.examples[i];
        std::array<char, 64> buf{};
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), ex.objective_value);
        (void)ec;
        put("Example " + std::to_string(i + 1), "Instance: " + rel(ex.instance_path) + "\nSolution: " +
                                                    rel(ex.solution_path) + "\nObjective value: " +
                                                    std::string(buf.data(), ptr));
    }
    if (!desc.training_instances.empty()) {
        std::string body;
        for (const auto& p : desc.training_instances) body += rel(p) + "\n";
        body.pop_back();
        put(section::kTrainingInstances, body);
    }
    return out;
}

} // namespace osgen
