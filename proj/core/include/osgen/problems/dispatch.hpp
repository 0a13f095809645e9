// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <type_traits>

#include "osgen/problems/ap.hpp"
#include "osgen/problems/etp.hpp"
#include "osgen/problems/gtsp.hpp"
#include "osgen/problems/problem.hpp"
#include "osgen/problems/tsp.hpp"

namespace osgen {

/// Calls `f(std::type_identity<P>{})` with the problem type named by `kind`.
template <class F>
decltype(auto) visit_problem(ProblemKind kind, F&& f) {
    switch (kind) {
    case ProblemKind::Tsp: return f(std::type_identity<Tsp>{});
    case ProblemKind::Gtsp: return f(std::type_identity<Gtsp>{});
    case ProblemKind::Ap: return f(std::type_identity<Ap>{});
    case ProblemKind::Etp: break;
    }
    return f(std::type_identity<Etp>{});
}

} // namespace osgen
