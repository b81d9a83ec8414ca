#include <doctest.h>

#include <sstream>
#include <vector>

#include "chiral/errors.hpp"
#include "chiral/input.hpp"

using namespace chiral;

namespace {

InputParseError capture(const std::string& text) {
  try {
    parse_numbers(text);
  } catch (const InputParseError& error) {
    return error;
  }
  FAIL("expected InputParseError for: ", text);
  return InputParseError("unreachable", 0, 0);
}

}  // namespace

TEST_CASE("plain and comma-separated tokens parse alike") {
  CHECK(parse_numbers("0 1 2") == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(parse_numbers("0, 0, 1") == std::vector<double>{0.0, 0.0, 1.0});
  CHECK(parse_numbers("1,2,3") == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(parse_numbers("1,,2") == std::vector<double>{1.0, 2.0});
  CHECK(parse_numbers("") == std::vector<double>{});
  CHECK(parse_numbers("  \n , \t\n") == std::vector<double>{});
}

TEST_CASE("newlines and blank lines separate silently") {
  CHECK(parse_numbers("1\n2\n\n\n3\n") == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(parse_numbers("1 2\n3, 4\r\n5") ==
        std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0});
}

TEST_CASE("decimal and scientific notations are accepted") {
  CHECK(parse_numbers("-1.5 +2.25 .5 4.") ==
        std::vector<double>{-1.5, 2.25, 0.5, 4.0});
  CHECK(parse_numbers("1e3 -2.5E-2 +1.25e+2") ==
        std::vector<double>{1000.0, -0.025, 125.0});
  CHECK(parse_numbers("1e-320")[0] == 1e-320);  // subnormal, still a value
}

TEST_CASE("bad tokens report their line and column") {
  const InputParseError error = capture("1.5 2.x 3");
  CHECK(error.line() == 1);
  CHECK(error.column() == 5);

  const InputParseError multiline = capture("1 2\n\n3 oops");
  CHECK(multiline.line() == 3);
  CHECK(multiline.column() == 3);

  const InputParseError leading = capture("x");
  CHECK(leading.line() == 1);
  CHECK(leading.column() == 1);

  CHECK_THROWS_AS(parse_numbers("1 2 3-4"), InputParseError);
  CHECK_THROWS_AS(parse_numbers("--5"), InputParseError);
  CHECK_THROWS_AS(parse_numbers("1.2.3"), InputParseError);
}

TEST_CASE("textual non-finite tokens are parse errors, not values") {
  CHECK_THROWS_AS(parse_numbers("nan"), InputParseError);
  CHECK_THROWS_AS(parse_numbers("NaN"), InputParseError);
  CHECK_THROWS_AS(parse_numbers("inf"), InputParseError);
  CHECK_THROWS_AS(parse_numbers("-inf"), InputParseError);
  CHECK_THROWS_AS(parse_numbers("Infinity"), InputParseError);
  CHECK_THROWS_AS(parse_numbers("1e999"), InputParseError);
  const InputParseError error = capture("1 2 inf");
  CHECK(error.line() == 1);
  CHECK(error.column() == 5);
}

TEST_CASE("streams feed the same parser") {
  std::istringstream stream("4 5\n6");
  CHECK(read_numbers(stream) == std::vector<double>{4.0, 5.0, 6.0});
}
