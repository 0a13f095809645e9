// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "osgen/problems/ap.hpp"
#include "osgen/problems/etp.hpp"
#include "osgen/problems/gtsp.hpp"
#include "osgen/problems/tsp.hpp"
#include "osgen/rng.hpp"

namespace osgen::generators {

/// The ten assignment instances of sizes 10, 20, ..., 100 with costs uniform in {0..99}.
std::vector<ap::Instance> ap_instances(std::uint64_t seed);

/// The ten timetabling instances. For i = 1..10: exams uniform in {5..5i+5},
/// slots uniform in {exams..2*exams}, students uniform in {5..5i+5}; each
/// student takes 2, 3 or 4 distinct exams chosen uniformly without replacement.
std::vector<etp::Instance> etp_instances(std::uint64_t seed);

/// Uniform points on a 1000 x 1000 grid; cost is the rounded Euclidean
/// distance, at least 1. Symmetric.
tsp::Instance euclidean_tsp(std::size_t n, Rng& rng);

/// Euclidean cities as above, randomly partitioned into `m` non-empty clusters.
gtsp::Instance euclidean_gtsp(std::size_t n, std::size_t m, Rng& rng);

ap::Instance uniform_ap(std::size_t n, std::int64_t max_cost, Rng& rng);

} // namespace osgen::generators
