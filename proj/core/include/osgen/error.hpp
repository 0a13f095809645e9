// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace osgen {

/// Base of every exception thrown by the library. `category()` is a stable
/// machine-readable tag used by the CLI on its error stream.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
    [[nodiscard]] virtual const char* category() const noexcept { return "error"; }
};

/// Malformed instance, solution or configuration text. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const char* category() const noexcept override { return "parse"; }

private:
    std::size_t line_;
};

/// A description file is missing a mandatory section or has an invalid one.
class SchemaError : public Error {
public:
    SchemaError(std::string section, const std::string& message)
        : Error(message), section_(std::move(section)) {}
    [[nodiscard]] const std::string& section() const noexcept { return section_; }
    [[nodiscard]] const char* category() const noexcept override { return "schema"; }

private:
    std::string section_;
};

class IoError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* category() const noexcept override { return "io"; }
};

/// An operation was called outside its contract (e.g. objective of an infeasible solution).
class ContractViolation : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* category() const noexcept override { return "contract"; }
};

class ConfigError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* category() const noexcept override { return "config"; }
};

/// A CMCS component threw while being applied.
class ComponentFailure : public Error {
public:
    ComponentFailure(std::string component, const std::string& message)
        : Error("component '" + component + "' failed: " + message), component_(std::move(component)) {}
    [[nodiscard]] const std::string& component() const noexcept { return component_; }
    [[nodiscard]] const char* category() const noexcept override { return "component"; }

private:
    std::string component_;
};

/// Generated code raised (or the worker reported) an error. `line` is the
/// 1-based line inside `unit`, 0 when unknown; `source_line` is its content.
class UnitError : public Error {
public:
    UnitError(std::string type, std::string message, std::size_t line = 0, std::string unit = {},
              std::string source_line = {})
        : Error(type + ": " + message), type_(std::move(type)), message_(std::move(message)), line_(line),
          unit_(std::move(unit)), source_line_(std::move(source_line)) {}
    [[nodiscard]] const std::string& type() const noexcept { return type_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& unit() const noexcept { return unit_; }
    [[nodiscard]] const std::string& source_line() const noexcept { return source_line_; }
    [[nodiscard]] const char* category() const noexcept override { return "unit"; }

private:
    std::string type_;
    std::string message_;
    std::size_t line_;
    std::string unit_;
    std::string source_line_;
};

/// A hosted call exceeded its time limit; the worker was killed.
class HostTimeout : public Error {
public:
    HostTimeout(std::string op, double limit_ms)
        : Error("operation '" + op + "' exceeded its time limit of " + std::to_string(static_cast<long long>(limit_ms)) +
                " ms"),
          op_(std::move(op)), limit_ms_(limit_ms) {}
    [[nodiscard]] const std::string& op() const noexcept { return op_; }
    [[nodiscard]] double limit_ms() const noexcept { return limit_ms_; }
    [[nodiscard]] const char* category() const noexcept override { return "timeout"; }

private:
    std::string op_;
    double limit_ms_;
};

/// Worker could not start, crashed, or broke the wire protocol.
class HostError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* category() const noexcept override { return "host"; }
};

/// LLM backend could not deliver a response; retriable.
class TransportError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* category() const noexcept override { return "transport"; }
};

} // namespace osgen
