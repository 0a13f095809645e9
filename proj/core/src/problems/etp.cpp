// SPDX-License-Identifier: Apache-2.0
#include "osgen/problems/etp.hpp"

#include <algorithm>
#include <limits>

#include "osgen/error.hpp"
#include "osgen/problems/text.hpp"

namespace osgen {

namespace {

// Sorts in place.
std::int64_t min_gap(std::vector<int>& slots) {
    std::sort(slots.begin(), slots.end());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 1; i < slots.size(); ++i)
        best = std::min<std::int64_t>(best, static_cast<std::int64_t>(slots[i]) - slots[i - 1]);
    return best;
}

} // namespace

std::int64_t etp::min_slot_distance(std::vector<int> slots) {
    if (slots.size() < 2) throw ContractViolation("slot distance needs at least two exams");
    return min_gap(slots);
}

Etp::Instance Etp::parse_instance(std::string_view text_in) {
    const auto lines = text::split_lines(text_in);
    if (lines.size() < 3) throw ParseError(lines.size() + 1, "expected exam, slot and student counts on lines 1-3");
    const auto exams = text::parse_single_int(lines[0], "number of exams");
    const auto slots = text::parse_single_int(lines[1], "number of time slots");
    const auto students = text::parse_single_int(lines[2], "number of students");
    if (exams <= 0) throw ParseError(1, "number of exams must be positive");
    if (slots <= 0) throw ParseError(2, "number of time slots must be positive");
    if (students <= 0) throw ParseError(3, "number of students must be positive");

    Instance inst;
    inst.n_exams = static_cast<std::size_t>(exams);
    inst.n_slots = static_cast<std::size_t>(slots);
    const auto n_students = static_cast<std::size_t>(students);
    if (lines.size() < 3 + n_students)
        throw ParseError(lines.back().number + 1, "expected " + std::to_string(n_students) + " student lines, found " +
                                                      std::to_string(lines.size() - 3));
    for (std::size_t s = 0; s < n_students; ++s) {
        const auto& line = lines[3 + s];
        std::vector<int> taken;
        for (auto exam : text::parse_ints(line)) {
            if (exam < 1 || exam > exams)
                throw ParseError(line.number, "exam " + std::to_string(exam) + " outside [1, " + std::to_string(exams) + "]");
            const int id = static_cast<int>(exam - 1);
            if (std::find(taken.begin(), taken.end(), id) != taken.end())
                throw ParseError(line.number, "exam " + std::to_string(exam) + " listed twice for student " +
                                                  std::to_string(s + 1));
            taken.push_back(id);
        }
        inst.student_exams.push_back(std::move(taken));
    }
    text::expect_trailing_blank(lines, 3 + n_students);
    return inst;
}

std::string Etp::write_instance(const Instance& inst) {
    std::string out = std::to_string(inst.n_exams) + "\n" + std::to_string(inst.n_slots) + "\n" +
                      std::to_string(inst.n_students()) + "\n";
    for (const auto& exams : inst.student_exams) {
        for (std::size_t i = 0; i < exams.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(exams[i] + 1);
        }
        out.push_back('\n');
    }
    return out;
}

Etp::Solution Etp::parse_solution(std::string_view text_in) { return text::parse_one_based_line(text_in); }

std::string Etp::write_solution(const Solution& slots) { return text::write_one_based_line(slots); }

Etp::Solution Etp::random_solution(const Instance& inst, Rng& rng) {
    Solution slots(inst.n_exams);
    for (auto& s : slots) s = static_cast<int>(rng.index(inst.n_slots));
    return slots;
}

Feasibility Etp::check(const Instance& inst, const Solution& slots) {
    if (slots.size() != inst.n_exams)
        return Feasibility::violated("solution assigns " + std::to_string(slots.size()) + " exams, expected " +
                                     std::to_string(inst.n_exams));
    for (std::size_t e = 0; e < slots.size(); ++e)
        if (slots[e] < 0 || static_cast<std::size_t>(slots[e]) >= inst.n_slots)
            return Feasibility::violated("exam " + std::to_string(e + 1) + " is in slot " +
                                         std::to_string(static_cast<long long>(slots[e]) + 1) + ", outside [1, " +
                                         std::to_string(inst.n_slots) + "]");
    return Feasibility::ok();
}

std::int64_t Etp::evaluate(const Instance& inst, const Solution& slots) {
    std::int64_t worst = std::numeric_limits<std::int64_t>::max();
    bool any = false;
    std::vector<int> buf;
    for (const auto& exams : inst.student_exams) {
        if (exams.size() < 2) continue;
        buf.clear();
        for (int e : exams) buf.push_back(slots[static_cast<std::size_t>(e)]);
        worst = std::min(worst, min_gap(buf));
        any = true;
    }
    return any ? -worst : 0;
}

std::int64_t Etp::objective(const Instance& inst, const Solution& slots) {
    if (auto f = check(inst, slots); !f) throw ContractViolation("objective of infeasible timetable: " + f.diagnostic);
    return evaluate(inst, slots);
}

} // namespace osgen
