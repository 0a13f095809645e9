// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osgen/binding.hpp"
#include "osgen/error.hpp"

namespace osgen {

/// A black-box solution modifier. `apply` mutates the solution in place and
/// must keep a feasible solution feasible. Only derived components that loop
/// (hill-climbers) consult the deadline.
template <Binding B>
struct Component {
    using Solution = typename B::Solution;
    using Apply = std::function<void(Solution&, const B&, Rng&, const Deadline&)>;

    std::string name;
    Apply apply;
};

/// Ordered component set H_1..H_k with unique names.
template <Binding B>
class ComponentPool {
public:
    ComponentPool() = default;
    explicit ComponentPool(std::vector<Component<B>> components) {
        for (auto& c : components) add(std::move(c));
    }

    void add(Component<B> component) {
        if (component.name.empty()) throw ConfigError("component name must not be empty");
        if (find(component.name)) throw ConfigError("duplicate component name '" + component.name + "'");
        components_.push_back(std::move(component));
    }

    [[nodiscard]] std::size_t size() const noexcept { return components_.size(); }
    [[nodiscard]] bool empty() const noexcept { return components_.empty(); }
    [[nodiscard]] const Component<B>& operator[](std::size_t i) const { return components_[i]; }
    [[nodiscard]] auto begin() const { return components_.begin(); }
    [[nodiscard]] auto end() const { return components_.end(); }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < components_.size(); ++i)
            if (components_[i].name == name) return i;
        return std::nullopt;
    }

    [[nodiscard]] std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(components_.size());
        for (const auto& c : components_) out.push_back(c.name);
        return out;
    }

private:
    std::vector<Component<B>> components_;
};

inline constexpr std::size_t kStrongMutationRepeats = 3;
inline constexpr std::size_t kHillClimberIterations[] = {10, 100, 1000};

/// Applies `base` exactly `n` times in sequence.
template <Binding B>
Component<B> strong_mutation(Component<B> base, std::size_t n = kStrongMutationRepeats) {
    std::string name = "strong" + std::to_string(n) + ":" + base.name;
    return {std::move(name), [apply = std::move(base.apply), n](auto& s, const B& b, Rng& rng, const Deadline& d) {
                for (std::size_t i = 0; i < n; ++i) apply(s, b, rng, d);
            }};
}

/// Up to `n` rounds of: apply `base`, keep the result only if the objective
/// strictly decreased, otherwise restore the previous solution. Stops early
/// once the deadline has passed (checked between rounds).
template <Binding B>
Component<B> hill_climber(Component<B> base, std::size_t n) {
    std::string name = "hc" + std::to_string(n) + ":" + base.name;
    return {std::move(name), [apply = std::move(base.apply), n](auto& s, const B& b, Rng& rng, const Deadline& d) {
                Objective current = b.objective(s);
                auto snapshot = s;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i > 0 && d.expired()) break;
                    apply(s, b, rng, d);
                    const Objective candidate = b.objective(s);
                    if (candidate < current) {
                        current = candidate;
                        snapshot = s;
                    } else {
                        s = snapshot;
                    }
                }
            }};
}

/// Replaces the solution with a fresh random one.
template <Binding B>
Component<B> ruin_recreate() {
    return {"ruin_recreate", [](auto& s, const B& b, Rng& rng, const Deadline&) { s = b.random_solution(rng); }};
}

/// Pool layout: the mutations, one strong mutation (n = 3) per mutation, three
/// hill-climbers (n = 10, 100, 1000) per mutation, then one ruin & recreate.
/// Size is 5m + 1 for m mutations.
template <Binding B>
ComponentPool<B> build_pool(const std::vector<Component<B>>& mutations) {
    if (mutations.empty()) throw ConfigError("component pool needs at least one mutation");
    ComponentPool<B> pool;
    for (const auto& m : mutations) pool.add(m);
    for (const auto& m : mutations) pool.add(strong_mutation(m));
    for (const auto& m : mutations)
        for (std::size_t n : kHillClimberIterations) pool.add(hill_climber(m, n));
    pool.add(ruin_recreate<B>());
    return pool;
}

} // namespace osgen
