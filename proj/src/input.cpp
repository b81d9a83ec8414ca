#include "chiral/input.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <string>

#include "chiral/errors.hpp"

namespace chiral {

namespace {

bool is_separator(char c) noexcept {
  return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

[[noreturn]] void reject(const std::string& reason, std::string_view token,
                         int line, int column) {
  throw InputParseError("line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + reason + " '" +
                            std::string(token) + "'",
                        line, column);
}

}  // namespace

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> values;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_separator(c)) {
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
      continue;
    }
    const int token_line = line;
    const int token_column = column;
    const std::size_t start = i;
    while (i < text.size() && !is_separator(text[i])) {
      ++i;
      ++column;
    }
    const std::string token(text.substr(start, i - start));

    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || end == token.c_str()) {
      reject("not a number", token, token_line, token_column);
    }
    if (errno == ERANGE && std::abs(value) == HUGE_VAL) {
      reject("magnitude not representable", token, token_line, token_column);
    }
    if (!std::isfinite(value)) {
      reject("non-finite value", token, token_line, token_column);
    }
    values.push_back(value);
  }
  return values;
}

std::vector<double> read_numbers(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_numbers(text);
}

}  // namespace chiral
