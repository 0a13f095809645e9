// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <string>
#include <unistd.h>
#include <vector>

#include "osgen/host/hosted_session.hpp"

namespace osgen::testing {

namespace fs = std::filesystem;

inline fs::path source_dir() { return fs::path(OSGEN_SOURCE_DIR); }
inline fs::path fixture(const std::string& rel) { return source_dir() / "tests" / "fixtures" / rel; }

inline std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spill(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

struct ScratchDir {
    fs::path path;
    explicit ScratchDir(const std::string& tag = "t") {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("osgen-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;
    [[nodiscard]] fs::path write(const std::string& rel, const std::string& text) const {
        spill(path / rel, text);
        return path / rel;
    }
};

inline constexpr const char* kToyTsp = "4\n0 1 4 2\n1 0 2 5\n4 2 0 3\n2 5 3 0\n";

/// Instance, solution and optionally algorithm plus mutation units of the
/// TSP fixture OS.
inline std::vector<UnitSource> tsp_fixture_units(bool algorithm = false, bool mutations = false) {
    std::vector<UnitSource> units{{"instance", slurp(fixture("tsp_units/instance.py"))},
                                  {"solution", slurp(fixture("tsp_units/solution.py"))}};
    if (algorithm) units.push_back({"algorithm", slurp(fixture("tsp_units/algorithm.py"))});
    if (mutations) {
        units.push_back({"MyMutation1", slurp(fixture("tsp_units/mutation1.py"))});
        units.push_back({"MyMutation2", slurp(fixture("tsp_units/mutation2.py"))});
    }
    return units;
}

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs `command` through the shell, capturing both streams.
inline CommandResult run_command(const std::string& command) {
    static int counter = 0;
    const auto err_path =
        fs::temp_directory_path() / ("osgen-cmd-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    CommandResult r;
    FILE* pipe = ::popen((command + " 2>" + err_path.string()).c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    fs::remove(err_path);
    return r;
}

inline std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

} // namespace osgen::testing
