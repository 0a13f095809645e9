// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "osgen/components.hpp"
#include "osgen/types.hpp"

namespace osgen {

struct AlgorithmRun {
    std::string solution;
    double elapsed_ms = 0;
};

/// The operations of a complete optimisation system (instance, solution,
/// optional algorithm and mutation classes) over one loaded instance.
/// Solutions travel as their solution-file text. Errors from the units
/// surface as UnitError, HostTimeout or HostError.
class OsSession {
public:
    virtual ~OsSession() = default;

    virtual void load_instance(const std::filesystem::path& path) = 0;
    virtual std::string random_solution(std::uint64_t seed) = 0;
    virtual Feasibility is_feasible(const std::string& solution) = 0;
    virtual Objective objective(const std::string& solution) = 0;
    virtual void save_solution(const std::string& solution, const std::filesystem::path& path) = 0;
    virtual std::string load_solution(const std::filesystem::path& path) = 0;

    [[nodiscard]] virtual std::vector<std::string> mutation_names() const = 0;
    virtual std::string apply_mutation(const std::string& name, const std::string& solution, std::uint64_t seed) = 0;

    [[nodiscard]] virtual bool has_algorithm() const = 0;
    virtual AlgorithmRun run_algorithm(double budget_ms, std::uint64_t seed) = 0;
};

/// Binding over a session; copies share the session, which must outlive them.
class SessionBinding {
public:
    using Solution = std::string;

    explicit SessionBinding(OsSession& session) : session_(&session) {}

    [[nodiscard]] OsSession& session() const noexcept { return *session_; }
    Solution random_solution(Rng& rng) const { return session_->random_solution(rng()); }
    Objective objective(const Solution& s) const { return session_->objective(s); }
    Feasibility check(const Solution& s) const { return session_->is_feasible(s); }

private:
    OsSession* session_;
};

/// One component per mutation class of the session, named after the class.
std::vector<Component<SessionBinding>> session_mutations(const OsSession& session);

} // namespace osgen
