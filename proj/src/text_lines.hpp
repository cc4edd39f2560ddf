#pragma once

// Shared line tokenizer for the v1 text formats. Internal to the library.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/error.hpp"
#include "bruhat/root_datum.hpp"

namespace bruhat::detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

/// Splits on whitespace; drops blank lines and lines whose first
/// non-blank character is '#'.
std::vector<Line> tokenize(std::string_view text);

[[noreturn]] void parse_fail(const Line& line, const std::string& what);
[[noreturn]] void parse_fail(const std::string& what);

int parse_int(const Line& line, const std::string& token);

/// Expects `line.tokens[0] == keyword` and exactly `count` tokens in total
/// (or at least `count` when `at_least`).
void expect(const Line& line, std::string_view keyword, std::size_t count, bool at_least = false);

/// Parses a `rootdatum v1` block starting at lines[pos]; stops after an
/// optional `end` line or at the first line that is not part of the block.
DatumPtr parse_root_datum(const std::vector<Line>& lines, std::size_t& pos);

}  // namespace bruhat::detail
