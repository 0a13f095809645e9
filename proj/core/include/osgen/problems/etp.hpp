// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osgen/problems/problem.hpp"

namespace osgen {

namespace etp {

struct Instance {
    std::size_t n_exams = 0;
    std::size_t n_slots = 0;
    std::vector<std::vector<int>> student_exams; // per student, 0-based exam ids

    [[nodiscard]] std::size_t n_students() const noexcept { return student_exams.size(); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Smallest slot distance between any two of the given slots; requires >= 2 values.
/// Slots {3, 9, 7} give 2.
std::int64_t min_slot_distance(std::vector<int> slots);

} // namespace etp

/// Exam timetabling: assign every exam a slot so that the minimum distance
/// between two exams of any one student is as large as possible. Encoded as
/// minimisation of -min_s x_s. Students with fewer than two exams do not
/// constrain the objective; with no such student at all the objective is 0.
struct Etp {
    using Instance = etp::Instance;
    using Solution = std::vector<int>; // exam -> 0-based slot
    static constexpr std::string_view name = "etp";

    static Instance parse_instance(std::string_view text);
    static std::string write_instance(const Instance& inst);
    static Solution parse_solution(std::string_view text);
    static std::string write_solution(const Solution& slots);
    /// Independent uniform slot per exam.
    static Solution random_solution(const Instance& inst, Rng& rng);
    static Feasibility check(const Instance& inst, const Solution& slots);
    static std::int64_t evaluate(const Instance& inst, const Solution& slots);
    static std::int64_t objective(const Instance& inst, const Solution& slots);
};

} // namespace osgen
