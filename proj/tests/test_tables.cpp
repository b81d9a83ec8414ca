#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chiral/errors.hpp"
#include "chiral/montecarlo.hpp"
#include "chiral/tables.hpp"

using namespace chiral;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE_MESSAGE(static_cast<bool>(file), "cannot open ", path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("the reference grid has the documented shape") {
  const std::vector<int> grid = reference_grid();
  CHECK(grid.size() == 98 + 90 + 1);
  CHECK(grid.front() == 3);
  CHECK(grid[97] == 100);
  CHECK(grid[98] == 110);
  CHECK(grid[187] == 1000);
  CHECK(grid.back() == 10000);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("reference tables cover the grid for both laws") {
  const std::vector<int> grid = reference_grid();
  for (Law law : {Law::uniform, Law::normal}) {
    const ReferenceTable& table = reference_table(law);
    CHECK(table.law == law);
    REQUIRE(table.rows.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(table.rows[i].n == grid[i]);
      REQUIRE(table.rows[i].estimates.size() == 4);
    }
  }
}

TEST_CASE("embedded text round-trips through parse and emit byte-exactly") {
  for (Law law : {Law::uniform, Law::normal}) {
    const ReferenceTable& table = reference_table(law);
    CHECK(emit_table(law, table.rows, TableFormat::paper_text) ==
          embedded_table_text(law));
  }
}

TEST_CASE("embedded text matches the shipped data assets byte for byte") {
  CHECK(read_file(std::string(CHIRAL_DATA_DIR) +
                  "/chiral_quantiles_uniform.txt") ==
        embedded_table_text(Law::uniform));
  CHECK(read_file(std::string(CHIRAL_DATA_DIR) +
                  "/chiral_quantiles_normal.txt") ==
        embedded_table_text(Law::normal));
}

TEST_CASE("published spot rows appear verbatim in the embedded text") {
  const std::string_view uniform = embedded_table_text(Law::uniform);
  const std::string_view normal = embedded_table_text(Law::normal);
  CHECK(uniform.find("\n3 0.212764 0.231432 0.242661 0.246342 0.001020 "
                     "0.000774 0.000583 0.000320\n") != std::string_view::npos);
  CHECK(uniform.find("\n100 0.010268 0.013574 0.018043 0.021550 ") !=
        std::string_view::npos);
  CHECK(uniform.find("\n10000 0.000104 0.000138 0.000186 0.000223 0.000001 "
                     "0.000002 0.000004 0.000006\n") != std::string_view::npos);
  CHECK(normal.find("\n3 0.206148 ") != std::string_view::npos);
  CHECK(normal.find(" 0.245439 ") != std::string_view::npos);
  CHECK(normal.find("\n10000 0.000184 0.000224 0.000276 0.000317 0.000002 "
                    "0.000003 0.000005 0.000006\n") != std::string_view::npos);
}

TEST_CASE("fnv1a64 matches the published test vectors") {
  CHECK(detail::fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(detail::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(detail::fnv1a64("foobar") == 0x85944171f73967e8ull);
  // any single-byte edit moves the checksum
  std::string text(embedded_table_text(Law::uniform));
  const std::uint64_t pristine = detail::fnv1a64(text);
  text[text.size() / 2] ^= 1;
  CHECK(detail::fnv1a64(text) != pristine);
}

TEST_CASE("the embedded tables audit clean") {
  CHECK(verify_embedded_tables().empty());
}

TEST_CASE("table text parsing rejects corrupted layouts") {
  CHECK_THROWS_AS(detail::parse_table_text(""), Error);
  CHECK_THROWS_AS(detail::parse_table_text("3 0.1 0.2\n"), Error);
  CHECK_THROWS_AS(detail::parse_table_text("# header only\n"), Error);
  CHECK_THROWS_AS(detail::parse_table_text("# h\n3 0.1 0.2 0.3 0.4 0.5\n"),
                  Error);
  CHECK_THROWS_AS(
      detail::parse_table_text(
          "# h\n3 0.1 0.2 0.3 0.4 0.5 0.6 0.7 0.8 0.9\n"),
      Error);
  CHECK_THROWS_AS(
      detail::parse_table_text("# h\nx 0.1 0.2 0.3 0.4 0.5 0.6 0.7 0.8\n"),
      Error);
  CHECK_THROWS_AS(
      detail::parse_table_text(
          "# h\n3 0.1 0.2 0.3 0.4 0.5 0.6 0.7 0.8\n# stray\n"),
      Error);
  CHECK_NOTHROW(detail::parse_table_text(
      "# h\n3 0.1 0.2 0.3 0.4 0.5 0.6 0.7 0.8\n"));
}

TEST_CASE("exact lookup returns the published critical values") {
  CHECK(lookup_critical(Law::uniform, 3, 0.90) == doctest::Approx(0.212764));
  CHECK(lookup_critical(Law::uniform, 3, 0.95) == doctest::Approx(0.231432));
  CHECK(lookup_critical(Law::uniform, 100, 0.95) == doctest::Approx(0.013574));
  CHECK(lookup_critical(Law::uniform, 110, 0.90) == doctest::Approx(0.009351));
  CHECK(lookup_critical(Law::uniform, 500, 0.90) == doctest::Approx(0.002078));
  CHECK(lookup_critical(Law::uniform, 1000, 0.90) == doctest::Approx(0.001041));
  CHECK(lookup_critical(Law::uniform, 10000, 0.99) == doctest::Approx(0.000223));
  CHECK(lookup_critical(Law::normal, 3, 0.90) == doctest::Approx(0.206148));
  CHECK(lookup_critical(Law::normal, 3, 0.99) == doctest::Approx(0.245439));
  CHECK(lookup_critical(Law::normal, 100, 0.95) == doctest::Approx(0.017552));
  CHECK(lookup_critical(Law::normal, 1000, 0.99) == doctest::Approx(0.002977));
  CHECK(lookup_critical(Law::normal, 10000, 0.90) == doctest::Approx(0.000184));
}

TEST_CASE("lookup rejects unsupported levels and sizes") {
  CHECK_THROWS_AS(lookup_critical(Law::uniform, 3, 0.93), UnsupportedLevel);
  CHECK_THROWS_AS(lookup_critical(Law::uniform, 3, 0.5), UnsupportedLevel);
  CHECK_THROWS_AS(lookup_critical(Law::uniform, 2, 0.95),
                  SampleSizeOutOfRange);
  CHECK_THROWS_AS(lookup_critical(Law::uniform, 10001, 0.95),
                  SampleSizeOutOfRange);
  CHECK_THROWS_AS(lookup_critical(Law::uniform, 105, 0.95),
                  SampleSizeNotTabulated);
  CHECK_THROWS_AS(lookup_critical(Law::normal, 4711, 0.90),
                  SampleSizeNotTabulated);
  CHECK_THROWS_AS(
      lookup_critical(Law::uniform, 105, 0.93, LookupPolicy::interpolate),
      UnsupportedLevel);
  CHECK_THROWS_AS(
      lookup_critical(Law::uniform, 2, 0.95, LookupPolicy::interpolate),
      SampleSizeOutOfRange);
}

TEST_CASE("interpolation bridges the grid and collapses on it") {
  for (Law law : {Law::uniform, Law::normal}) {
    for (double level : kTableLevels) {
      // on-grid short circuit: identical to exact lookup
      for (int n : {3, 57, 100, 110, 1000, 10000}) {
        CHECK(lookup_critical(law, n, level, LookupPolicy::interpolate) ==
              lookup_critical(law, n, level, LookupPolicy::exact));
      }
      // off-grid: strictly between the bracketing rows
      const double low = lookup_critical(law, 110, level);
      const double high = lookup_critical(law, 100, level);
      const double bridged =
          lookup_critical(law, 105, level, LookupPolicy::interpolate);
      CHECK(bridged > std::min(low, high));
      CHECK(bridged < std::max(low, high));
    }
  }
  // hand-derived: t = (1/105 - 1/110) / (1/100 - 1/110) = 10/21
  const double expected =
      (10.0 / 21.0) * 0.010268 + (11.0 / 21.0) * 0.009351;
  CHECK(lookup_critical(Law::uniform, 105, 0.90, LookupPolicy::interpolate) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("large-n tail of the uniform table follows the 1/n trend") {
  for (int n : {100, 1000, 10000}) {
    const double scaled = n * lookup_critical(Law::uniform, n, 0.90);
    CHECK(scaled >= 0.95);
    CHECK(scaled <= 1.15);
  }
}
