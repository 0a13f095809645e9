// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osgen/types.hpp"

namespace osgen::detail {

/// Feasible iff `values` is a permutation of {0..n-1}; diagnostics are 1-based.
inline Feasibility check_permutation(const std::vector<int>& values, std::size_t n, std::string_view item,
                                     std::string_view container) {
    if (values.size() != n)
        return Feasibility::violated(std::string(container) + " has " + std::to_string(values.size()) + " " +
                                     std::string(item) + "s, expected exactly " + std::to_string(n));
    std::vector<char> seen(n, 0);
    for (std::size_t pos = 0; pos < values.size(); ++pos) {
        const int v = values[pos];
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            return Feasibility::violated(std::string(item) + " " + std::to_string(static_cast<long long>(v) + 1) +
                                         " at position " + std::to_string(pos + 1) + " is outside [1, " +
                                         std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(v)])
            return Feasibility::violated(std::string(item) + " " + std::to_string(v + 1) + " repeats at position " +
                                         std::to_string(pos + 1));
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return Feasibility::ok();
}

} // namespace osgen::detail
