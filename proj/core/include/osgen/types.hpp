// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace osgen {

/// Objective values as seen by the problem-independent layers. All built-in
/// problems are integral; doubles represent them exactly up to 2^53.
using Objective = double;

inline constexpr Objective kWorstObjective = std::numeric_limits<Objective>::infinity();

/// Result of a feasibility test: on failure `diagnostic` names the broken constraint.
struct Feasibility {
    bool feasible = true;
    std::string diagnostic;

    static Feasibility ok() { return {}; }
    static Feasibility violated(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return feasible; }
};

/// Dense row-major square matrix of integer costs. Indices are 0-based.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(std::size_t n, std::int64_t fill = 0) : n_(n), data_(n * n, fill) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::int64_t operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * n_ + col];
    }
    std::int64_t& at(std::size_t row, std::size_t col) noexcept { return data_[row * n_ + col]; }
    [[nodiscard]] const std::int64_t* row(std::size_t r) const noexcept { return data_.data() + r * n_; }

    friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

/// Adds with overflow detection; throws osgen::ContractViolation on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

} // namespace osgen
