// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "osgen/cmcs.hpp"
#include "osgen/components.hpp"
#include "osgen/reference_mutations.hpp"

namespace osgen {

/// Full pool built from the two reference mutations of `P` (11 components).
template <Problem P>
ComponentPool<NativeBinding<P>> reference_pool() {
    return build_pool(reference_mutations<P>());
}

/// Default configuration of the reference solver: hill-climb with the first
/// mutation, perturb with a strong version of the second on failure.
template <Problem P>
CmcsConfiguration reference_configuration() {
    const auto m = reference_mutations<P>();
    return emulate_metaheuristic("self-loop-hill-climb", "hc1000:" + m.at(0).name, "strong3:" + m.at(1).name);
}

/// One reference CMCS run.
template <Problem P>
RunResult<typename P::Solution> solve_reference(const NativeBinding<P>& binding, const Budget& budget,
                                                std::uint64_t seed, const RunOptions& options = {}) {
    static const auto pool = reference_pool<P>();
    static const auto config = reference_configuration<P>();
    Rng rng(seed);
    return run(config, pool, binding, budget, rng, options);
}

} // namespace osgen
