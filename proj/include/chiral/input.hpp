#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

namespace chiral {

/// Parses free-form numeric text: decimal or scientific notation,
/// separated by any mix of whitespace, newlines and commas; blank lines
/// are ignored. Any other token raises InputParseError with the 1-based
/// line and column of the offending token. Textual NaN/infinity tokens
/// are rejected as parse errors rather than admitted as values.
std::vector<double> parse_numbers(std::string_view text);

/// Reads the whole stream, then parses as above.
std::vector<double> read_numbers(std::istream& in);

}  // namespace chiral
