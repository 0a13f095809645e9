// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact solvers used as best-known references.

#include <cstdint>
#include <vector>

#include "osgen/problems/ap.hpp"
#include "osgen/problems/gtsp.hpp"
#include "osgen/problems/tsp.hpp"

namespace osgen::exact {

struct Optimum {
    std::vector<int> solution; // 0-based, as the problem's Solution
    std::int64_t objective = 0;
};

inline constexpr std::size_t kMaxDpCities = 16;

/// Held-Karp dynamic programme; requires n <= kMaxDpCities.
Optimum solve_tsp(const tsp::Instance& inst);

/// Dynamic programme over visited clusters and last city; requires
/// M <= kMaxDpCities. Tour starts in cluster 0.
Optimum solve_gtsp(const gtsp::Instance& inst);

/// Hungarian method on the cost matrix. `row_potential`/`col_potential`
/// certify optimality: u_i + v_j <= c(i, j) everywhere with equality on the
/// returned assignment, so sum(u) + sum(v) equals the optimum.
struct ApCertificate {
    Optimum optimum;
    std::vector<std::int64_t> row_potential;
    std::vector<std::int64_t> col_potential;
};
ApCertificate solve_ap(const ap::Instance& inst);

/// True iff the dual potentials certify `cert.optimum` for `inst`.
bool verify_ap_certificate(const ap::Instance& inst, const ApCertificate& cert);

} // namespace osgen::exact
