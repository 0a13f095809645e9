// SPDX-License-Identifier: Apache-2.0
#include "osgen/problems/text.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "osgen/error.hpp"
#include "osgen/types.hpp"

namespace osgen {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw ContractViolation("objective overflows 64-bit range");
    return out;
}

} // namespace osgen

namespace osgen::text {

namespace {
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
} // namespace

std::string canonical_ending(std::string_view text) {
    std::size_t end = text.size();
    while (end > 0 && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ' || text[end - 1] == '\t'))
        --end;
    // Keep trailing spaces of the last content line.
    std::size_t cut = end;
    while (cut < text.size() && text[cut] != '\n' && text[cut] != '\r') ++cut;
    std::string out(text.substr(0, cut));
    out += '\n';
    return out;
}

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view content = text.substr(start, end - start);
        if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
        out.push_back({number++, content});
        start = end + 1;
    }
    return out;
}

bool blank(const Line& line) {
    for (char c : line.content)
        if (!is_space(c)) return false;
    return true;
}

std::vector<std::string_view> tokens(std::string_view content) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < content.size()) {
        while (i < content.size() && is_space(content[i])) ++i;
        std::size_t j = i;
        while (j < content.size() && !is_space(content[j])) ++j;
        if (j > i) out.push_back(content.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, "integer out of range '" + std::string(token) + "'");
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError(line, "non-numeric token '" + std::string(token) + "'");
    return value;
}

std::vector<std::int64_t> parse_ints(const Line& line) {
    std::vector<std::int64_t> out;
    for (auto tok : tokens(line.content)) out.push_back(parse_int(tok, line.number));
    return out;
}

std::int64_t parse_single_int(const Line& line, std::string_view what) {
    auto values = parse_ints(line);
    if (values.size() != 1)
        throw ParseError(line.number, "expected a single integer (" + std::string(what) + "), found " +
                                          std::to_string(values.size()) + " values");
    return values.front();
}

void expect_trailing_blank(const std::vector<Line>& lines, std::size_t from) {
    for (std::size_t i = from; i < lines.size(); ++i)
        if (!blank(lines[i])) throw ParseError(lines[i].number, "unexpected trailing content");
}

std::string write_one_based_line(const std::vector<int>& values) {
    std::string out;
    out.reserve(values.size() * 4 + 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(static_cast<std::int64_t>(values[i]) + 1);
    }
    out.push_back('\n');
    return out;
}

std::vector<int> parse_one_based_line(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t first = 0;
    while (first < lines.size() && blank(lines[first])) ++first;
    if (first == lines.size()) throw ParseError(0, "empty solution");
    std::vector<int> out;
    for (auto v : parse_ints(lines[first])) {
        if (v < std::numeric_limits<int>::min() + 1 || v > std::numeric_limits<int>::max())
            throw ParseError(lines[first].number, "index out of range " + std::to_string(v));
        out.push_back(static_cast<int>(v - 1));
    }
    expect_trailing_blank(lines, first + 1);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("failed writing '" + path + "'");
}

} // namespace osgen::text
