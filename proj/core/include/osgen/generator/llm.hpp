// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace osgen::generator {

enum class Role { User, Assistant };
[[nodiscard]] std::string_view to_string(Role role) noexcept;

struct Message {
    Role role = Role::User;
    std::string text;
};

/// The single conversation every prompt is sent in; each request carries the
/// full history.
class Conversation {
public:
    void add_user(std::string text) { messages_.push_back({Role::User, std::move(text)}); }
    void add_assistant(std::string text) { messages_.push_back({Role::Assistant, std::move(text)}); }
    void clear() noexcept { messages_.clear(); }

    [[nodiscard]] const std::vector<Message>& messages() const noexcept { return messages_; }
    [[nodiscard]] std::size_t size() const noexcept { return messages_.size(); }
    [[nodiscard]] bool empty() const noexcept { return messages_.empty(); }
    /// Text of the most recent user message, or empty.
    [[nodiscard]] std::string_view last_prompt() const noexcept;

private:
    std::vector<Message> messages_;
};

/// A chat model. `send` returns the assistant reply to the conversation and
/// throws TransportError when the exchange itself fails.
class LlmBackend {
public:
    virtual ~LlmBackend() = default;
    virtual std::string send(const Conversation& conversation) = 0;
    [[nodiscard]] virtual std::string descriptor() const = 0;
};

/// Replays canned responses. Script (JSON):
///   {"responses": [{"match": "<substring>", "text": "..."} | {"file": "path"}, ...],
///    "default": "..."}
/// Each request consumes the first unused entry whose "match" (if any) occurs
/// in the latest prompt; with none left, "default" is returned when present,
/// otherwise TransportError is thrown. "file" paths are relative to the script.
class MockBackend final : public LlmBackend {
public:
    struct Entry {
        std::optional<std::string> match;
        std::string text;
    };

    MockBackend(std::vector<Entry> entries, std::optional<std::string> fallback = std::nullopt);
    static MockBackend from_script(const std::filesystem::path& script);
    static MockBackend from_json(std::string_view json, const std::filesystem::path& base_dir);

    std::string send(const Conversation& conversation) override;
    [[nodiscard]] std::string descriptor() const override { return "mock:" + std::to_string(entries_.size()); }

    /// Prompts received so far, in order.
    [[nodiscard]] const std::vector<std::string>& prompts() const noexcept { return prompts_; }
    [[nodiscard]] std::size_t remaining() const noexcept;
    /// Conversation length (messages) at each request.
    [[nodiscard]] const std::vector<std::size_t>& history_sizes() const noexcept { return history_sizes_; }

private:
    std::vector<Entry> entries_;
    std::vector<bool> used_;
    std::optional<std::string> fallback_;
    std::vector<std::string> prompts_;
    std::vector<std::size_t> history_sizes_;
};

/// OpenAI-compatible chat completions endpoint.
struct HttpBackendConfig {
    /// Full URL, e.g. https://host/v1/chat/completions.
    std::string endpoint;
    std::string model;
    /// Environment variable holding the bearer token; unset or empty sends none.
    std::string api_key_env = "OSGEN_LLM_API_KEY";
    std::optional<double> temperature;
    std::chrono::seconds timeout{300};
};

class HttpBackend final : public LlmBackend {
public:
    explicit HttpBackend(HttpBackendConfig config);
    std::string send(const Conversation& conversation) override;
    [[nodiscard]] std::string descriptor() const override { return config_.model + "@" + config_.endpoint; }

    /// Request body for `conversation`.
    [[nodiscard]] std::string request_body(const Conversation& conversation) const;

private:
    HttpBackendConfig config_;
    std::string origin_; // scheme://host[:port]
    std::string path_;
};

} // namespace osgen::generator
