// SPDX-License-Identifier: Apache-2.0
#include "osgen/generator/orchestrator.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "osgen/error.hpp"
#include "osgen/generator/prompts.hpp"

namespace osgen::generator {

using validation::FailureKind;
using validation::SuiteStage;
using validation::TestOutcome;
using validation::TestStatus;
using validation::UnitKind;
using validation::ValidationFailure;
using validation::ValidationReport;

void validate_policy(const GenerationPolicy& p) {
    const std::pair<const char*, int> counts[] = {
        {"instance_repairs", p.instance_repairs},   {"solution_repairs", p.solution_repairs},
        {"algorithm_repairs", p.algorithm_repairs}, {"mutation_target", p.mutation_target},
        {"mutation_total_attempts", p.mutation_total_attempts}, {"mutation_repairs_each", p.mutation_repairs_each},
        {"os_restarts", p.os_restarts},             {"transport_retries", p.transport_retries},
    };
    for (const auto& [name, v] : counts)
        if (v <= 0) throw ConfigError(std::string("generation policy: ") + name + " must be positive");
    if (p.mutation_trials == 0) throw ConfigError("generation policy: mutation_trials must be positive");
}

std::string attempts_to_jsonl(const std::vector<AttemptRecord>& log) {
    std::string out;
    for (const auto& r : log) {
        nlohmann::json j{{"restart", r.restart},
                         {"stage", r.stage},
                         {"attempt", r.attempt},
                         {"outcome", r.passed ? "passed" : "failed"}};
        if (!r.passed) {
            j["failure_kind"] = r.failure_kind;
            j["summary"] = r.summary;
        }
        out += j.dump() + "\n";
    }
    return out;
}

std::optional<std::string> extract_code(std::string_view response,
                                        const std::function<bool(const std::string&)>& parses) {
    std::string code;
    bool in_block = false;
    bool any_block = false;
    std::size_t at = 0;
    while (at <= response.size()) {
        auto nl = response.find('\n', at);
        if (nl == std::string_view::npos) nl = response.size();
        auto line = response.substr(at, nl - at);
        std::size_t lead = 0;
        while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
        if (line.substr(lead, 3) == "```") {
            in_block = !in_block;
            any_block = true;
            if (!in_block && !code.empty() && code.back() != '\n') code += '\n';
        } else if (in_block) {
            code.append(line);
            code += '\n';
        }
        at = nl + 1;
    }
    if (any_block) {
        if (code.find_first_not_of(" \t\r\n") == std::string::npos) return std::nullopt;
        return code;
    }
    std::string whole(response);
    if (whole.find("class ") == std::string::npos) return std::nullopt;
    if (!parses(whole)) return std::nullopt;
    if (!whole.empty() && whole.back() != '\n') whole += '\n';
    return whole;
}

std::string repair_prompt(const ValidationFailure& f) {
    std::string out = f.test_name + "\n";
    out += (f.error_type.empty() ? std::string("Error") : f.error_type) + ": " + f.error_text + "\n";
    if (f.source_line)
        out += "The error occurred in line " + std::to_string(f.source_line->number) + ": " + f.source_line->content + "\n";
    out += "Fix the problem and reply only with the complete corrected code.";
    return out;
}

namespace {

ValidationFailure no_code_failure() {
    ValidationFailure f;
    f.test_name = "The response does not contain any code.";
    f.kind = FailureKind::NoCode;
    f.error_type = "NoCode";
    f.error_text = "expected a Python code block";
    return f;
}

std::string summarize(const ValidationFailure& f) {
    std::string s = f.test_name + " " + f.error_type + ": " + f.error_text;
    if (f.source_line) s += " (line " + std::to_string(f.source_line->number) + ")";
    return s;
}

/// Outcome of the check a candidate unit goes through.
struct Verdict {
    std::optional<ValidationFailure> failure;
    ValidationReport report;
};

class Session {
public:
    Session(const ProblemDescription& desc, LlmBackend& backend, GeneratorKind kind, const GenerateOptions& opt,
            GenerationResult& result)
        : desc_(desc), backend_(backend), kind_(kind), opt_(opt), result_(result), checker_(opt.host, {}) {}

    std::optional<GeneratedOs> attempt(int restart) {
        restart_ = restart;
        conversation_.clear();
        GeneratedOs os;
        os.kind = kind_;

        auto instance = stage("instance", render_instance_prompt(desc_), 1 + opt_.policy.instance_repairs,
                              UnitKind::Instance, 0, os, nullptr);
        if (!instance) return fail("instance stage exhausted its attempts");
        auto solution = stage("solution", render_solution_prompt(desc_), 1 + opt_.policy.solution_repairs,
                              UnitKind::Solution, 0, os, nullptr);
        if (!solution) return fail("solution stage exhausted its attempts");

        if (kind_ != GeneratorKind::CMCS) {
            const auto prompt = kind_ == GeneratorKind::MIP ? render_mip_prompt(desc_)
                                                            : render_algorithm_prompt(desc_, approach());
            if (!stage("algorithm", prompt, 1 + opt_.policy.algorithm_repairs, UnitKind::Algorithm, 0, os, nullptr))
                return fail("algorithm stage exhausted its attempts");
            return os;
        }

        int total = 0;
        int index = 1;
        std::vector<std::string> successes;
        while (static_cast<int>(successes.size()) < opt_.policy.mutation_target &&
               total < opt_.policy.mutation_total_attempts) {
            const auto name = validation::class_name(UnitKind::Mutation, index);
            if (stage(name, render_mutation_prompt(desc_, index, successes), 1 + opt_.policy.mutation_repairs_each,
                      UnitKind::Mutation, index, os, &total))
                successes.push_back(name);
            ++index;
        }
        if (successes.empty()) return fail("no mutation class passed validation");
        if (!train(os)) return fail("offline training failed");
        if (!final_check(os)) return fail("the assembled system failed validation");
        return os;
    }

    std::string last_failure;

private:
    std::optional<GeneratedOs> fail(std::string why) {
        last_failure = std::move(why);
        return std::nullopt;
    }

    Approach approach() const {
        switch (kind_) {
        case GeneratorKind::SA: return Approach::SimulatedAnnealing;
        case GeneratorKind::TS: return Approach::TabuSearch;
        case GeneratorKind::ILS: return Approach::IteratedLocalSearch;
        default: return Approach::Free;
        }
    }

    std::string exchange(std::string prompt) {
        conversation_.add_user(std::move(prompt));
        for (int retry = 0;; ++retry) {
            try {
                auto reply = backend_.send(conversation_);
                ++result_.prompts_sent;
                conversation_.add_assistant(reply);
                return reply;
            } catch (const TransportError&) {
                if (retry >= opt_.policy.transport_retries) throw;
            }
        }
    }

    void record(const std::string& stage, int attempt, const std::optional<ValidationFailure>& failure) {
        AttemptRecord r;
        r.restart = restart_;
        r.stage = stage;
        r.attempt = attempt;
        r.passed = !failure;
        if (failure) {
            r.failure_kind = std::string(validation::to_string(failure->kind));
            r.summary = summarize(*failure);
        }
        result_.attempts.push_back(std::move(r));
    }

    /// Prompts, extracts, validates and repairs until the unit passes or
    /// `max_attempts` responses (or the shared `total` budget) are used.
    bool stage(const std::string& name, std::string prompt, int max_attempts, UnitKind kind, int index,
               GeneratedOs& os, int* total) {
        for (int attempt = 1; attempt <= max_attempts; ++attempt) {
            if (total && *total >= opt_.policy.mutation_total_attempts) return false;
            if (total) ++*total;
            const auto reply = exchange(std::move(prompt));
            GeneratedUnit unit{kind, index, {}, conversation_.size() - 1};
            Verdict verdict;
            if (auto code = extract_code(reply, [&](const std::string& s) { return checker_.parses(s); })) {
                unit.source = std::move(*code);
                verdict = check(unit, os);
            } else {
                verdict.failure = no_code_failure();
            }
            record(name, attempt, verdict.failure);
            if (!verdict.failure) {
                verdict.report.unit = unit.name();
                os.units.push_back(std::move(unit));
                os.validation.push_back(std::move(verdict.report));
                return true;
            }
            prompt = repair_prompt(*verdict.failure);
        }
        return false;
    }

    std::vector<UnitSource> sources_with(const GeneratedOs& os, const GeneratedUnit& extra) const {
        std::vector<UnitSource> units;
        for (const auto& u : os.units)
            if (u.kind == UnitKind::Instance || u.kind == UnitKind::Solution) units.push_back({u.name(), u.source});
        units.push_back({extra.name(), extra.source});
        return units;
    }

    Verdict check(const GeneratedUnit& unit, const GeneratedOs& os) {
        Verdict v;
        const std::string compile_test = "Compiling " + validation::class_name(unit.kind, unit.mutation_index) + ".";
        if (auto f = validation::static_check(checker_, unit.kind, unit.source, unit.mutation_index)) {
            v.failure = std::move(f);
            return v;
        }
        v.report.outcomes.push_back({compile_test, TestStatus::Passed, std::nullopt});

        const bool is_mutation = unit.kind == UnitKind::Mutation;
        HostedSession session(opt_.host, sources_with(os, unit),
                              is_mutation ? std::vector<std::string>{unit.name()} : std::vector<std::string>{},
                              unit.kind == UnitKind::Algorithm);
        if (is_mutation) {
            const std::string test = unit.name() + ".apply() keeps solutions feasible and changes them.";
            for (const auto& path : mutation_instances()) {
                std::optional<ValidationFailure> f;
                try {
                    session.load_instance(path);
                    f = validation::mutation_check(session, unit.name(), opt_.policy.mutation_trials,
                                                   derive_seed(opt_.seed, 0x6d7574));
                } catch (...) {
                    f = validation::failure_from_current_exception(test);
                }
                if (f) {
                    v.failure = std::move(f);
                    return v;
                }
            }
            v.report.outcomes.push_back({test, TestStatus::Passed, std::nullopt});
            return v;
        }

        validation::SuiteOptions suite;
        suite.stage = unit.kind == UnitKind::Instance   ? SuiteStage::Instance
                      : unit.kind == UnitKind::Solution ? SuiteStage::Solution
                                                        : SuiteStage::Algorithm;
        suite.budget_ms = opt_.validation_budget_ms;
        suite.seed = opt_.seed;
        const auto report = validation::dynamic_suite(session, desc_.examples, suite);
        for (const auto& o : report.outcomes) v.report.outcomes.push_back(o);
        if (const auto* f = report.first_failure()) v.failure = *f;
        return v;
    }

    std::vector<std::filesystem::path> mutation_instances() const {
        std::vector<std::filesystem::path> out;
        for (const auto& e : desc_.examples) out.push_back(e.instance_path);
        if (out.empty() && !desc_.training_instances.empty()) out.push_back(desc_.training_instances.front());
        return out;
    }

    bool train(GeneratedOs& os) {
        std::vector<std::filesystem::path> available = desc_.training_instances;
        if (available.empty())
            for (const auto& e : desc_.examples) available.push_back(e.instance_path);
        if (available.empty()) {
            record("training", 1, plain("training needs instances", "the description lists no instances"));
            return false;
        }
        std::vector<std::unique_ptr<HostedSession>> sessions;
        std::vector<SessionBinding> bindings;
        std::vector<std::string> labels;
        try {
            for (auto idx : sample_training_instances(available.size(), opt_.training.max_instances, opt_.training.seed)) {
                sessions.push_back(open_session(os, opt_.host));
                sessions.back()->load_instance(available[idx]);
                bindings.emplace_back(*sessions.back());
                labels.push_back(available[idx].filename().string());
            }
            auto plan = opt_.training;
            plan.threads = 1;
            const auto pool = build_pool(session_mutations(*sessions.front()));
            auto report = rank_and_select(
                evaluate_configurations(enumerate_deterministic_configs(pool), pool, bindings, labels, plan));
            const auto& winner_row = report.table.objectives[report.winner_index];
            if (std::none_of(winner_row.begin(), winner_row.end(), [](double v) { return std::isfinite(v); })) {
                const auto& errors = report.table.errors[report.winner_index];
                record("training", 1, plain("Every CMCS configuration failed during training.",
                                            errors.empty() ? std::string("no result") : errors.front()));
                return false;
            }
            os.configuration = report.winner();
            os.training_report = write_training_report(report);
        } catch (...) {
            record("training", 1, validation::failure_from_current_exception("Offline training of CMCS failed."));
            return false;
        }
        record("training", 1, std::nullopt);
        return true;
    }

    bool final_check(GeneratedOs& os) {
        std::optional<ValidationFailure> failure;
        ValidationReport report;
        try {
            auto session = open_session(os, opt_.host);
            validation::SuiteOptions suite;
            suite.stage = SuiteStage::Algorithm;
            suite.budget_ms = opt_.validation_budget_ms;
            suite.seed = opt_.seed;
            suite.producer = [&os](OsSession& s, double budget, std::uint64_t seed) {
                return solve_with(os, s, budget, seed);
            };
            report = validation::dynamic_suite(*session, desc_.examples, suite);
            if (const auto* f = report.first_failure()) failure = *f;
        } catch (...) {
            failure = validation::failure_from_current_exception("Running the assembled system failed.");
        }
        record("final", 1, failure);
        if (failure) return false;
        report.unit = "system";
        os.validation.push_back(std::move(report));
        return true;
    }

    static ValidationFailure plain(std::string test, std::string text) {
        ValidationFailure f;
        f.test_name = std::move(test);
        f.kind = FailureKind::RuntimeError;
        f.error_type = "TrainingError";
        f.error_text = std::move(text);
        return f;
    }

    const ProblemDescription& desc_;
    LlmBackend& backend_;
    GeneratorKind kind_;
    const GenerateOptions& opt_;
    GenerationResult& result_;
    Conversation conversation_;
    HostedSession checker_;
    int restart_ = 0;
};

} // namespace

GenerationResult generate_os(const ProblemDescription& desc, LlmBackend& backend, GeneratorKind kind,
                             const GenerateOptions& options) {
    validate_policy(options.policy);
    GenerationResult result;
    Session session(desc, backend, kind, options, result);
    for (int restart = 1; restart <= options.policy.os_restarts; ++restart) {
        result.restarts_used = restart;
        if (auto os = session.attempt(restart)) {
            result.os = std::move(os);
            result.failure.clear();
            return result;
        }
        result.failure = session.last_failure;
    }
    result.failure = "generation failed " + std::to_string(options.policy.os_restarts) + " times; last: " +
                     result.failure;
    return result;
}

} // namespace osgen::generator
