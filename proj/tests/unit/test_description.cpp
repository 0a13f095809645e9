// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "osgen/description.hpp"
#include "osgen/error.hpp"

using namespace osgen;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("osgen-desc-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    void touch(const std::string& rel) const {
        fs::create_directories((path / rel).parent_path());
        std::ofstream(path / rel) << "x\n";
    }
};

std::string full_text(bool with_solution_format = true) {
    std::string s =
        "### Input data ###\nA matrix.\n\n"
        "### Solution ###\nA tour.\n"
        "### Constraints ###\nNo repeats.\n"
        "### Objective function ###\nSum of costs.\n"
        "### Instance file format ###\nFirst line n.\n";
    if (with_solution_format) s += "### Solution file format ###\nOne line.\n";
    s += "### Example 1 ###\nInstance: toy/i.txt\nSolution: toy/s.txt\nObjective value: 8\n"
         "### Training instances ###\ntrain/a.txt\ntrain/b.txt\n";
    return s;
}

} // namespace

TEST_CASE("all sections, one example, two training paths") {
    TempDir dir;
    for (auto f : {"toy/i.txt", "toy/s.txt", "train/a.txt", "train/b.txt"}) dir.touch(f);
    auto desc = parse_problem_description(full_text(), dir.path);
    CHECK(desc.input_data == "A matrix.");
    CHECK(desc.solution_file_format == "One line.");
    REQUIRE(desc.examples.size() == 1);
    CHECK(desc.examples[0].objective_value == 8.0);
    CHECK(desc.examples[0].instance_path == (dir.path / "toy/i.txt").lexically_normal());
    REQUIRE(desc.training_instances.size() == 2);
    CHECK(desc.training_instances[1] == (dir.path / "train/b.txt").lexically_normal());
}

TEST_CASE("missing solution file format names the section") {
    TempDir dir;
    for (auto f : {"toy/i.txt", "toy/s.txt", "train/a.txt", "train/b.txt"}) dir.touch(f);
    try {
        (void)parse_problem_description(full_text(false), dir.path);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.section() == "Solution file format");
    }
}

TEST_CASE("unresolvable path names the path") {
    TempDir dir;
    dir.touch("toy/i.txt");
    try {
        (void)parse_problem_description(full_text(), dir.path);
        FAIL("expected an io error");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("s.txt") != std::string::npos);
    }
}

TEST_CASE("structural errors") {
    TempDir dir;
    for (auto f : {"toy/i.txt", "toy/s.txt", "train/a.txt", "train/b.txt"}) dir.touch(f);
    CHECK_THROWS_AS((void)parse_problem_description("preamble\n" + full_text(), dir.path), SchemaError);
    CHECK_THROWS_AS((void)parse_problem_description(full_text() + "### Bogus ###\nx\n", dir.path), SchemaError);
    CHECK_THROWS_AS((void)parse_problem_description(full_text() + "### Solution ###\nagain\n", dir.path), SchemaError);
    auto nan = full_text();
    nan.replace(nan.find("value: 8"), 8, "value: nan");
    CHECK_THROWS_AS((void)parse_problem_description(nan, dir.path), SchemaError);
}

TEST_CASE("write then parse preserves content") {
    TempDir dir;
    for (auto f : {"toy/i.txt", "toy/s.txt", "train/a.txt", "train/b.txt"}) dir.touch(f);
    auto desc = parse_problem_description(full_text(), dir.path);
    auto again = parse_problem_description(write_problem_description(desc, dir.path), dir.path);
    CHECK(again.constraints == desc.constraints);
    CHECK(again.examples[0].solution_path == desc.examples[0].solution_path);
    CHECK(again.training_instances == desc.training_instances);
}
