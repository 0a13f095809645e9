// SPDX-License-Identifier: Apache-2.0
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "osgen/error.hpp"
#include "osgen/generator/llm.hpp"

namespace osgen::generator {

using nlohmann::json;

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
    const auto scheme_end = config_.endpoint.find("://");
    if (scheme_end == std::string::npos) throw ConfigError("endpoint '" + config_.endpoint + "' lacks a scheme");
    const auto scheme = config_.endpoint.substr(0, scheme_end);
    if (scheme != "http" && scheme != "https") throw ConfigError("unsupported endpoint scheme '" + scheme + "'");
    const auto path_start = config_.endpoint.find('/', scheme_end + 3);
    origin_ = config_.endpoint.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : config_.endpoint.substr(path_start);
    if (config_.model.empty()) throw ConfigError("HTTP backend needs a model name");
}

std::string HttpBackend::request_body(const Conversation& conversation) const {
    json messages = json::array();
    for (const auto& m : conversation.messages()) messages.push_back({{"role", to_string(m.role)}, {"content", m.text}});
    json body{{"model", config_.model}, {"messages", messages}};
    if (config_.temperature) body["temperature"] = *config_.temperature;
    return body.dump();
}

std::string HttpBackend::send(const Conversation& conversation) {
    httplib::Client client(origin_);
    client.set_connection_timeout(std::chrono::seconds(30));
    client.set_read_timeout(config_.timeout);
    client.set_write_timeout(std::chrono::seconds(60));
    httplib::Headers headers;
    if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key)
        headers.emplace("Authorization", std::string("Bearer ") + key);
    auto res = client.Post(path_, headers, request_body(conversation), "application/json");
    if (!res) throw TransportError("request to " + config_.endpoint + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw TransportError("endpoint answered HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 500));
    try {
        const auto doc = json::parse(res->body);
        return doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw TransportError(std::string("unexpected response body: ") + e.what());
    }
}

} // namespace osgen::generator
