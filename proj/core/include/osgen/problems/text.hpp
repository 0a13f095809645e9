// SPDX-License-Identifier: Apache-2.0
#pragma once

// Line-oriented helpers shared by the instance and solution readers. Every
// format in the library is whitespace-separated integers on numbered lines.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace osgen::text {

struct Line {
    std::size_t number = 0; // 1-based
    std::string_view content;
};

/// Writers end files with exactly one newline; this applies the same rule
/// to read text (trailing blank lines dropped, a missing final newline added)
/// so byte comparison with a rewrite is meaningful.
std::string canonical_ending(std::string_view text);

/// Splits on '\n', dropping a trailing '\r' from each line. A final newline
/// does not produce an extra empty line.
std::vector<Line> split_lines(std::string_view text);

/// True when the line holds only whitespace.
bool blank(const Line& line);

/// Whitespace-separated tokens.
std::vector<std::string_view> tokens(std::string_view content);

/// Exact base-10 integer; throws ParseError naming the line on anything else.
std::int64_t parse_int(std::string_view token, std::size_t line);

std::vector<std::int64_t> parse_ints(const Line& line);

/// A line holding exactly one integer.
std::int64_t parse_single_int(const Line& line, std::string_view what);

/// Throws ParseError unless every line from `from` on is blank.
void expect_trailing_blank(const std::vector<Line>& lines, std::size_t from);

/// "a b c\n" from 0-based values written 1-based.
std::string write_one_based_line(const std::vector<int>& values);

/// Reads a single line of 1-based integers into 0-based values.
std::vector<int> parse_one_based_line(std::string_view text);

/// Reads a whole file; throws IoError naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace osgen::text
