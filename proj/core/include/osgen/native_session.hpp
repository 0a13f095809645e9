// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "osgen/error.hpp"
#include "osgen/host/session.hpp"
#include "osgen/problems/problem.hpp"
#include "osgen/reference_solver.hpp"

namespace osgen {

/// OsSession over a built-in problem: reference mutations and the reference
/// CMCS solver as the algorithm. Used as the oracle OS.
template <Problem P>
class NativeSession final : public OsSession {
public:
    NativeSession() : mutations_(reference_mutations<P>()) {}

    void load_instance(const std::filesystem::path& path) override {
        binding_.emplace(P::parse_instance(read(path)));
    }
    std::string random_solution(std::uint64_t seed) override {
        Rng rng(seed);
        return P::write_solution(binding().random_solution(rng));
    }
    Feasibility is_feasible(const std::string& solution) override {
        return binding().check(P::parse_solution(solution));
    }
    Objective objective(const std::string& solution) override {
        return static_cast<Objective>(P::objective(binding().instance(), P::parse_solution(solution)));
    }
    void save_solution(const std::string& solution, const std::filesystem::path& path) override {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write " + path.string());
        out << P::write_solution(P::parse_solution(solution));
    }
    std::string load_solution(const std::filesystem::path& path) override {
        return P::write_solution(P::parse_solution(read(path)));
    }
    [[nodiscard]] std::vector<std::string> mutation_names() const override {
        std::vector<std::string> out;
        for (const auto& m : mutations_) out.push_back(m.name);
        return out;
    }
    std::string apply_mutation(const std::string& name, const std::string& solution, std::uint64_t seed) override {
        for (const auto& m : mutations_) {
            if (m.name != name) continue;
            auto s = P::parse_solution(solution);
            Rng rng(seed);
            m.apply(s, binding(), rng, Deadline::never());
            return P::write_solution(s);
        }
        throw ConfigError("unknown mutation '" + name + "'");
    }
    [[nodiscard]] bool has_algorithm() const override { return true; }
    AlgorithmRun run_algorithm(double budget_ms, std::uint64_t seed) override {
        const auto result = solve_reference(binding(), Budget::millis(budget_ms), seed);
        return {P::write_solution(result.best_solution), result.elapsed_ms};
    }

    [[nodiscard]] const NativeBinding<P>& binding() const {
        if (!binding_) throw ContractViolation("no instance loaded");
        return *binding_;
    }

private:
    static std::string read(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot read " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    std::vector<Component<NativeBinding<P>>> mutations_;
    std::optional<NativeBinding<P>> binding_;
};

/// Native session for a problem chosen at run time.
std::unique_ptr<OsSession> make_native_session(ProblemKind kind);

} // namespace osgen
