// SPDX-License-Identifier: Apache-2.0
#include "osgen/generator/prompts.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "osgen/error.hpp"

namespace osgen::generator {

namespace {

constexpr std::string_view kInstanceTemplate =
    "### Problem description ###\n"
    "\n"
    "Consider a combinatorial optimisation problem with the following input data.  <Input data>\n"
    "    \n"
    "A solution to the problem consists of the following.  <Solution>\n"
    "\n"
    "The constraints are as follows.  <Constraints>\n"
    "\n"
    "The objective function is as follows.  <Objective function>\n"
    "\n"
    "### Instructions ###\n"
    "Compose a Python class MyInstance with exactly one method: '__init__(self, file_path)'.  The __init__ method "
    "should open the file located at file_path, read the instance data from the file and save it into instance "
    "variables.  The file format is as follows. \n"
    " <Instance file format>\n"
    "    \n"
    "Reply only with the code of MyInstance.  Include all the necessary import statements.  Do not include examples.";

constexpr std::string_view kSolutionTemplate =
    "Produce a Python class MySolution with the following methods:\n"
    "1. __init__(self, inst: MyInstance) that does the following:\n"
    "- Saves the parameter 'inst' into an instance variable 'problem_instance'.  \n"
    "- Composes a random solution to the problem specified by 'inst'.  The solution has to satisfy all the problem "
    "constraints.\n"
    "- Saves the composed solution into instance variables.\n"
    "\n"
    "2. is_feasible(self) -> bool that returns True if the solution satisfies all the problem constraints and False "
    "otherwise.  If the solution breaks some constraint, the method should also print an error message describing "
    "how exactly a constraint was broken.\n"
    "\n"
    "3. get_objective(self) that calculates the objective value of the solution and returns it.  Assume that the "
    "solution satisfies all the constraints.\n"
    "\n"
    "4. save_to_file(self, output_filename: str) that creates a file 'output_filename' and saves the solution to "
    "it.  The output file format is as follows.  <Solution file format>\n"
    "\n"
    "5. load_from_file(self, input_filename: str) that opens the file 'input_filename' and loads the solution from "
    "it.  It should save the loaded solution in the current object.  The file format is the same as described in "
    "point 4.\n"
    "\n"
    "Reply only with the code of MySolution.  Include all the necessary import statements.  Do not include "
    "examples.";

constexpr std::string_view kAlgorithmTemplate =
    "Compose a Python class MyAlgorithm with the following methods:\n"
    "1. __init__(self).  The method should not do anything.\n"
    "\n"
    "2. solve(self, instance: MyInstance, time_budget_ms: int) -> MySolution.  The method should find and return a "
    "heuristic solution to the problem instance specified in the parameter 'instance'.  The solution process should "
    "be terminated after 'time_budget_ms' milliseconds time.<Approach sentence>\n"
    "\n"
    "Reply only with the code of MyAlgorithm.  Include all the necessary import statements.  Do not include "
    "examples.";

constexpr std::string_view kMipTemplate =
    "Compose a Python class MyAlgorithm with the following methods:\n"
    "1. __init__(self).  The method should not do anything.\n"
    "\n"
    "2. solve(self, instance: MyInstance, time_budget_ms: int) -> MySolution.  The method should encode the problem "
    "as a mixed integer programming program and solve it using the Gurobi solver.  It should then create an "
    "instance of class MySolution and populate it with the solution found by Gurobi, even if Gurobi did not find an "
    "optimal solution.  The solution process should be terminated after 'time_budget_ms' milliseconds time.  If no "
    "solution is found within the time budget, return a random solution.\n"
    "\n"
    "Reply only with the code of MyAlgorithm.  Include all the necessary import statements.  Do not include "
    "examples.";

constexpr std::string_view kMutationTemplate =
    "Compose Python class MyMutation<index> with the following methods:\n"
    "1. __init__(self).  The method should not do anything.\n"
    "\n"
    "2. apply(self, cur_solution: MySolution) -> None.  Assume that 'cur_solution' satisfies all the problem "
    "constraints.  The method should apply a random change to the 'cur_solution' object such that 'cur_solution' "
    "still satisfies all the problem constraints.  Do not use the is_feasible() method.\n"
    "\n"
    "<Differentiation>"
    "Reply only with the code of MyMutation<index>.  Include all the necessary import statements.  Do not include "
    "examples.";

using Substitutions = std::vector<std::pair<std::string_view, std::string_view>>;

/// Single pass: substituted text is never rescanned for placeholders.
std::string substitute(std::string_view tmpl, const Substitutions& subs) {
    std::string out;
    std::size_t at = 0;
    while (at < tmpl.size()) {
        bool hit = false;
        if (tmpl[at] == '<') {
            for (const auto& [key, value] : subs) {
                if (tmpl.substr(at, key.size()) == key) {
                    out.append(value);
                    at += key.size();
                    hit = true;
                    break;
                }
            }
        }
        if (!hit) out += tmpl[at++];
    }
    return out;
}

} // namespace

Approach parse_approach(std::string_view label) {
    std::string s;
    for (char c : label) s += (c == '-' || c == '_') ? ' ' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "free") return Approach::Free;
    if (s == "simulated annealing" || s == "sa") return Approach::SimulatedAnnealing;
    if (s == "tabu search" || s == "ts") return Approach::TabuSearch;
    if (s == "iterated local search" || s == "ils") return Approach::IteratedLocalSearch;
    throw ConfigError("unknown algorithmic approach '" + std::string(label) + "'");
}

std::string_view approach_phrase(Approach approach) noexcept {
    switch (approach) {
    case Approach::Free: return "";
    case Approach::SimulatedAnnealing: return "simulated annealing";
    case Approach::TabuSearch: return "tabu search";
    case Approach::IteratedLocalSearch: return "iterated local search";
    }
    return "";
}

std::string render_instance_prompt(const ProblemDescription& desc) {
    return substitute(kInstanceTemplate, {{"<Input data>", desc.input_data},
                                          {"<Solution>", desc.solution},
                                          {"<Constraints>", desc.constraints},
                                          {"<Objective function>", desc.objective_function},
                                          {"<Instance file format>", desc.instance_file_format}});
}

std::string render_solution_prompt(const ProblemDescription& desc) {
    return substitute(kSolutionTemplate, {{"<Solution file format>", desc.solution_file_format}});
}

std::string render_algorithm_prompt(const ProblemDescription&, Approach approach) {
    const auto phrase = approach_phrase(approach);
    const std::string sentence = phrase.empty() ? "" : "  Use " + std::string(phrase) + " approach.";
    return substitute(kAlgorithmTemplate, {{"<Approach sentence>", sentence}});
}

std::string render_mip_prompt(const ProblemDescription&) { return std::string(kMipTemplate); }

std::string render_mutation_prompt(const ProblemDescription&, int index, const std::vector<std::string>& prior_names) {
    if (index < 1) throw ConfigError("mutation index must be at least 1");
    const auto idx = std::to_string(index);
    std::string differentiation;
    if (!prior_names.empty()) {
        std::string list;
        for (const auto& n : prior_names) list += (list.empty() ? "" : ", ") + n;
        differentiation = "The logic of MyMutation" + idx + " should be different to the logic of " + list + ".\n\n";
    }
    return substitute(kMutationTemplate, {{"<Differentiation>", differentiation}, {"<index>", idx}});
}

} // namespace osgen::generator
