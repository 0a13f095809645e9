// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <string>

#include "osgen/error.hpp"
#include "osgen/problems/problem.hpp"

namespace osgen {

std::string_view to_string(ProblemKind kind) noexcept {
    switch (kind) {
    case ProblemKind::Tsp: return "tsp";
    case ProblemKind::Gtsp: return "gtsp";
    case ProblemKind::Ap: return "ap";
    case ProblemKind::Etp: return "etp";
    }
    return "?";
}

ProblemKind parse_problem_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "tsp") return ProblemKind::Tsp;
    if (lower == "gtsp") return ProblemKind::Gtsp;
    if (lower == "ap") return ProblemKind::Ap;
    if (lower == "etp") return ProblemKind::Etp;
    throw ConfigError("unknown problem '" + std::string(name) + "' (expected tsp, gtsp, ap or etp)");
}

} // namespace osgen
