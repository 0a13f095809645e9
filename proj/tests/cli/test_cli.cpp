// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "../unit/support.hpp"
#include "osgen/bench.hpp"
#include "osgen/description.hpp"
#include "osgen/problems/generators.hpp"
#include "osgen/problems/tsp.hpp"

using namespace osgen;
using namespace osgen::testing;

namespace {

std::string cli() { return quote(fs::path(OSGEN_CLI)); }
fs::path library(const std::string& rel) { return source_dir() / "library" / rel; }

CommandResult osgen_cmd(const std::string& args) { return run_command(cli() + " " + args); }

} // namespace

TEST_CASE("solve on the TSP toy prints the objective of a feasible tour") {
    ScratchDir dir("cli-solve");
    const auto out = dir.path / "tour.txt";
    const auto r = osgen_cmd("solve " + quote(library("tsp/description.txt")) + " " +
                             quote(library("tsp/toy_instance.txt")) + " --budget-ms 100 --seed 3 --out " + quote(out));
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    const auto inst = Tsp::parse_instance(slurp(library("tsp/toy_instance.txt")));
    const auto tour = Tsp::parse_solution(slurp(out));
    CHECK(Tsp::check(inst, tour).feasible);
    CHECK(r.out == std::to_string(Tsp::objective(inst, tour)) + "\n");
}

TEST_CASE("iteration-budget solves are reproducible") {
    ScratchDir dir("cli-repro");
    const auto args = "solve " + quote(library("ap/description.txt")) + " " +
                      quote(library("ap/training/instance4.txt")) + " --iterations 400 --seed 9 --out ";
    const auto a = osgen_cmd(args + quote(dir.path / "a.txt"));
    const auto b = osgen_cmd(args + quote(dir.path / "b.txt"));
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(slurp(dir.path / "a.txt") == slurp(dir.path / "b.txt"));
}

TEST_CASE("generate with the mock backend writes a complete system") {
    ScratchDir dir("cli-gen");
    const auto out = dir.path / "os";
    const auto r = osgen_cmd("generate " + quote(library("tsp/description.txt")) +
                             " --kind CMCS --backend mock --script " + quote(fixture("mock/cmcs_clean.json")) +
                             " --out " + quote(out) +
                             " --training-budget-ms 2 --training-instances 2 --validation-budget-ms 200");
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    for (auto f : {"manifest.json", "configuration.txt", "training_report.tsv", "validation.jsonl", "attempts.jsonl",
                   "units/instance.py", "units/solution.py", "units/MyMutation1.py", "units/MyMutation2.py"})
        CHECK_MESSAGE(fs::exists(out / f), f);

    const auto s = osgen_cmd("solve " + quote(library("tsp/description.txt")) + " " +
                             quote(library("tsp/toy_instance.txt")) + " --solver os:" + quote(out) +
                             " --budget-ms 200 --out " + quote(dir.path / "sol.txt"));
    REQUIRE_MESSAGE(s.exit_code == 0, s.err);
    CHECK(s.out == "8\n");
}

TEST_CASE("exhausted generation exits nonzero with a category and keeps the attempt log") {
    ScratchDir dir("cli-exhaust");
    const auto r = osgen_cmd("generate " + quote(library("tsp/description.txt")) + " --backend mock --script " +
                             quote(fixture("mock/cmcs_exhaust.json")) + " --out " + quote(dir.path / "os"));
    CHECK(r.exit_code != 0);
    CHECK(r.err.rfind("osgen: error: generation: ", 0) == 0);
    CHECK(fs::exists(dir.path / "os" / "attempts.jsonl"));
    CHECK_FALSE(fs::exists(dir.path / "os" / "manifest.json"));
}

TEST_CASE("errors carry a machine-parseable category") {
    const std::regex line("^osgen: error: [a-z-]+: .+\n$");
    const auto bad_problem = osgen_cmd("--problem knapsack solve " + quote(library("tsp/description.txt")) + " " +
                                       quote(library("tsp/toy_instance.txt")));
    CHECK(bad_problem.exit_code != 0);
    CHECK(std::regex_match(bad_problem.err, line));
    CHECK(bad_problem.err.find(": config: ") != std::string::npos);

    ScratchDir dir("cli-err");
    const auto broken = dir.write("broken.txt", "3\n0 1\n");
    const auto parse = osgen_cmd("solve " + quote(library("tsp/description.txt")) + " " + quote(broken));
    CHECK(parse.exit_code != 0);
    CHECK(parse.err.find("osgen: error: parse: ") == 0);

    const auto usage = osgen_cmd("solve");
    CHECK(usage.exit_code != 0);
    CHECK(usage.err.find("osgen: error: usage: ") != std::string::npos);
}

TEST_CASE("bench writes one CSV per budget with the documented columns") {
    ScratchDir dir("cli-bench");
    const auto r = osgen_cmd("bench " + quote(library("ap/description.txt")) + " --instances " +
                             quote(library("ap/training/instance1.txt")) + " " +
                             quote(library("ap/training/instance2.txt")) +
                             " --budgets-ms 20,40 --seeds 1,2 --out-dir " + quote(dir.path));
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    for (auto name : {"bench_20ms.csv", "bench_40ms.csv"}) {
        const auto csv = slurp(dir.path / name);
        CHECK(csv.rfind("# osgen-bench-csv v1\n", 0) == 0);
        CHECK(csv.find("\ninstance,f,b,gap,solved,seed\n") != std::string::npos);
        CHECK(csv.find("\n# summary: ") != std::string::npos);
    }
    const auto table = bench::BestKnownTable::load(dir.path / "best_known.csv");
    REQUIRE(table.entries().size() == 2);
    for (const auto& [id, e] : table.entries()) CHECK(e.provenance == bench::Provenance::ExactOracle);
}

TEST_CASE("bench on ETP documents the objective shift") {
    ScratchDir dir("cli-bench-etp");
    const auto r = osgen_cmd("bench " + quote(library("etp/description.txt")) + " --instances " +
                             quote(library("etp/training/instance3.txt")) +
                             " --iterations 200 --seeds 1 --out-dir " + quote(dir.path));
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    const auto csv = slurp(dir.path / "bench_200it.csv");
    CHECK(csv.find("+n_slots") != std::string::npos);
    CHECK(slurp(dir.path / "best_known.csv").find("best-found") != std::string::npos);
}

TEST_CASE("make-instances reproduces the generators") {
    ScratchDir dir("cli-make");
    const auto r = osgen_cmd("--problem ap make-instances --seed 4 --out " + quote(dir.path));
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    const auto expected = generators::ap_instances(4);
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(slurp(dir.path / ("instance" + std::to_string(i + 1) + ".txt")) == Ap::write_instance(expected[i]));
}

TEST_CASE("describe-check accepts every shipped description") {
    for (auto p : {"tsp", "gtsp", "ap", "etp"}) {
        const auto r = osgen_cmd("describe-check " + quote(library(std::string(p) + "/description.txt")));
        CHECK_MESSAGE(r.exit_code == 0, r.err);
        CHECK(r.out.find(std::string(p) + " files: ok") != std::string::npos);
    }
}

TEST_CASE("validate reports the dynamic tests of the built-in system") {
    const auto r = osgen_cmd("validate " + quote(library("gtsp/description.txt")) + " --budget-ms 100");
    REQUIRE_MESSAGE(r.exit_code == 0, r.err);
    std::size_t passed = 0;
    for (std::size_t at = r.out.find("PASSED"); at != std::string::npos; at = r.out.find("PASSED", at + 1)) ++passed;
    CHECK(passed == 7 + 2);
}
