// SPDX-License-Identifier: Apache-2.0
#include "osgen/generator/llm.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "osgen/error.hpp"

namespace osgen::generator {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(Role role) noexcept { return role == Role::User ? "user" : "assistant"; }

std::string_view Conversation::last_prompt() const noexcept {
    for (auto it = messages_.rbegin(); it != messages_.rend(); ++it)
        if (it->role == Role::User) return it->text;
    return {};
}

MockBackend::MockBackend(std::vector<Entry> entries, std::optional<std::string> fallback)
    : entries_(std::move(entries)), used_(entries_.size(), false), fallback_(std::move(fallback)) {}

MockBackend MockBackend::from_script(const fs::path& script) {
    std::ifstream in(script, std::ios::binary);
    if (!in) throw IoError("cannot read mock script " + script.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str(), script.parent_path());
}

MockBackend MockBackend::from_json(std::string_view text, const fs::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("mock script is not valid JSON: ") + e.what());
    }
    auto read_file = [&](const std::string& rel) {
        const auto path = base_dir / rel;
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot read mock response file " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::vector<Entry> entries;
    for (const auto& r : doc.value("responses", json::array())) {
        Entry e;
        if (r.contains("match")) e.match = r["match"].get<std::string>();
        if (r.contains("text")) e.text = r["text"].get<std::string>();
        else if (r.contains("file")) e.text = read_file(r["file"].get<std::string>());
        else throw ConfigError("mock response needs \"text\" or \"file\"");
        entries.push_back(std::move(e));
    }
    std::optional<std::string> fallback;
    if (doc.contains("default")) fallback = doc["default"].get<std::string>();
    return MockBackend(std::move(entries), std::move(fallback));
}

std::string MockBackend::send(const Conversation& conversation) {
    const std::string prompt(conversation.last_prompt());
    prompts_.push_back(prompt);
    history_sizes_.push_back(conversation.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (used_[i]) continue;
        if (entries_[i].match && prompt.find(*entries_[i].match) == std::string::npos) continue;
        used_[i] = true;
        return entries_[i].text;
    }
    if (fallback_) return *fallback_;
    throw TransportError("mock backend has no response left for prompt " + std::to_string(prompts_.size()));
}

std::size_t MockBackend::remaining() const noexcept {
    std::size_t n = 0;
    for (bool u : used_) n += u ? 0 : 1;
    return n;
}

} // namespace osgen::generator
