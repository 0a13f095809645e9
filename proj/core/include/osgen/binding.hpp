// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <concepts>
#include <memory>
#include <string>
#include <string_view>

#include "osgen/problems/problem.hpp"
#include "osgen/rng.hpp"
#include "osgen/types.hpp"

namespace osgen {

/// The executable face of one problem instance as the search layers see it:
/// random solutions, objective and feasibility. Bindings are bound to an
/// instance, so components and configurations stay instance-independent.
template <class B>
concept Binding = requires(const B& b, const typename B::Solution& s, Rng& rng) {
    typename B::Solution;
    requires std::copyable<typename B::Solution>;
    { b.random_solution(rng) } -> std::same_as<typename B::Solution>;
    { b.objective(s) } -> std::convertible_to<Objective>;
    { b.check(s) } -> std::same_as<Feasibility>;
};

/// Binding over a built-in problem; the instance is shared read-only.
template <Problem P>
class NativeBinding {
public:
    using ProblemType = P;
    using Instance = typename P::Instance;
    using Solution = typename P::Solution;

    explicit NativeBinding(std::shared_ptr<const Instance> instance) : instance_(std::move(instance)) {}
    explicit NativeBinding(Instance instance) : instance_(std::make_shared<const Instance>(std::move(instance))) {}

    [[nodiscard]] const Instance& instance() const noexcept { return *instance_; }
    [[nodiscard]] const std::shared_ptr<const Instance>& shared_instance() const noexcept { return instance_; }

    Solution random_solution(Rng& rng) const { return P::random_solution(*instance_, rng); }
    /// Unchecked: the search only ever holds feasible solutions.
    Objective objective(const Solution& s) const { return static_cast<Objective>(P::evaluate(*instance_, s)); }
    Feasibility check(const Solution& s) const { return P::check(*instance_, s); }

    std::string write_solution(const Solution& s) const { return P::write_solution(s); }
    Solution parse_solution(std::string_view text) const { return P::parse_solution(text); }

private:
    std::shared_ptr<const Instance> instance_;
};

/// Point in time after which components must return and the engine stops.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    static Deadline never() noexcept { return Deadline(Clock::time_point::max()); }
    static Deadline at(Clock::time_point when) noexcept { return Deadline(when); }
    static Deadline after(std::chrono::nanoseconds d) noexcept { return Deadline(Clock::now() + d); }

    [[nodiscard]] bool bounded() const noexcept { return when_ != Clock::time_point::max(); }
    [[nodiscard]] bool expired() const noexcept { return bounded() && Clock::now() >= when_; }
    [[nodiscard]] Clock::time_point when() const noexcept { return when_; }

private:
    explicit Deadline(Clock::time_point when) noexcept : when_(when) {}
    Clock::time_point when_;
};

} // namespace osgen
