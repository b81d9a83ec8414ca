#include "chiral/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "chiral/errors.hpp"

namespace chiral {

namespace {

// Checksums of the embedded table text, pinned at transcription time.
constexpr std::uint64_t kUniformTableHash = 0x8d37c2cee471b91full;
constexpr std::uint64_t kNormalTableHash = 0x31357460454a9450ull;

constexpr double kLevelTolerance = 1e-12;

bool is_table_level(double level, std::size_t& index) noexcept {
  for (std::size_t i = 0; i < kTableLevels.size(); ++i) {
    if (std::abs(level - kTableLevels[i]) < kLevelTolerance) {
      index = i;
      return true;
    }
  }
  return false;
}

double row_mean(const QuantileTableRow& row, std::size_t level_index) {
  return row.estimates[level_index].mean_k;
}

}  // namespace

namespace detail {

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::vector<QuantileTableRow> parse_table_text(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  std::vector<QuantileTableRow> rows;
  bool saw_header = false;
  std::size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (saw_header || !rows.empty()) {
        throw Error("table text line " + std::to_string(line_number) +
                    ": stray header");
      }
      saw_header = true;
      continue;
    }
    std::istringstream fields(line);
    QuantileTableRow row;
    double values[8];
    if (!(fields >> row.n) || row.n < 2) {
      throw Error("table text line " + std::to_string(line_number) +
                  ": bad sample size");
    }
    for (double& value : values) {
      if (!(fields >> value)) {
        throw Error("table text line " + std::to_string(line_number) +
                    ": expected 8 values after n");
      }
    }
    std::string trailing;
    if (fields >> trailing) {
      throw Error("table text line " + std::to_string(line_number) +
                  ": trailing fields");
    }
    row.estimates.reserve(kTableLevels.size());
    for (std::size_t i = 0; i < kTableLevels.size(); ++i) {
      row.estimates.push_back({kTableLevels[i], values[i], values[4 + i]});
    }
    rows.push_back(std::move(row));
  }
  if (!saw_header) throw Error("table text has no header line");
  if (rows.empty()) throw Error("table text has no data rows");
  return rows;
}

}  // namespace detail

std::vector<int> reference_grid() {
  std::vector<int> grid;
  for (int n = 3; n <= 100; ++n) grid.push_back(n);
  for (int n = 110; n <= 1000; n += 10) grid.push_back(n);
  grid.push_back(10000);
  return grid;
}

std::string_view embedded_table_text(Law law) noexcept {
  return law == Law::uniform ? detail::kUniformTableText
                             : detail::kNormalTableText;
}

const ReferenceTable& reference_table(Law law) {
  static const ReferenceTable uniform{
      Law::uniform, detail::parse_table_text(detail::kUniformTableText)};
  static const ReferenceTable normal{
      Law::normal, detail::parse_table_text(detail::kNormalTableText)};
  return law == Law::uniform ? uniform : normal;
}

double lookup_critical(Law law, int n, double level, LookupPolicy policy) {
  std::size_t level_index = 0;
  if (!is_table_level(level, level_index)) {
    char buffer[128];
    std::snprintf(buffer, sizeof buffer,
                  "level %g is not tabulated (supported: 0.90 0.95 0.98 0.99)",
                  level);
    throw UnsupportedLevel(buffer);
  }
  const auto& rows = reference_table(law).rows;
  if (n < rows.front().n || n > rows.back().n) {
    throw SampleSizeOutOfRange(
        "sample size " + std::to_string(n) + " outside the tabulated range [" +
        std::to_string(rows.front().n) + ", " + std::to_string(rows.back().n) +
        "]");
  }
  const auto upper = std::lower_bound(
      rows.begin(), rows.end(), n,
      [](const QuantileTableRow& row, int value) { return row.n < value; });
  if (upper->n == n) return row_mean(*upper, level_index);
  if (policy == LookupPolicy::exact) {
    throw SampleSizeNotTabulated(
        "sample size " + std::to_string(n) +
        " is not a grid point (nearest: " + std::to_string(std::prev(upper)->n) +
        " and " + std::to_string(upper->n) +
        "); use interpolation to bridge the gap");
  }
  const auto& high = *upper;          // larger n
  const auto& low = *std::prev(upper);  // smaller n
  const double u = 1.0 / static_cast<double>(n);
  const double u_high = 1.0 / static_cast<double>(high.n);
  const double u_low = 1.0 / static_cast<double>(low.n);
  const double t = (u - u_high) / (u_low - u_high);
  return (1.0 - t) * row_mean(high, level_index) +
         t * row_mean(low, level_index);
}

std::vector<std::string> verify_embedded_tables() {
  std::vector<std::string> violations;
  const std::vector<int> grid = reference_grid();

  for (Law law : {Law::uniform, Law::normal}) {
    const std::string prefix = std::string(to_string(law)) + " table: ";
    const std::string_view text = embedded_table_text(law);
    const std::uint64_t expected_hash =
        law == Law::uniform ? kUniformTableHash : kNormalTableHash;
    const std::uint64_t actual_hash = detail::fnv1a64(text);
    if (actual_hash != expected_hash) {
      char buffer[96];
      std::snprintf(buffer, sizeof buffer,
                    "checksum mismatch (expected %016llx, got %016llx)",
                    static_cast<unsigned long long>(expected_hash),
                    static_cast<unsigned long long>(actual_hash));
      violations.push_back(prefix + buffer);
    }

    std::vector<QuantileTableRow> rows;
    try {
      rows = detail::parse_table_text(text);
    } catch (const Error& error) {
      violations.push_back(prefix + "unparseable (" + error.what() + ")");
      continue;
    }

    if (rows.size() != grid.size()) {
      violations.push_back(prefix + "expected " + std::to_string(grid.size()) +
                           " rows, got " + std::to_string(rows.size()));
      continue;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].n != grid[i]) {
        violations.push_back(prefix + "row " + std::to_string(i) +
                             " has n=" + std::to_string(rows[i].n) +
                             ", grid expects " + std::to_string(grid[i]));
      }
    }

    for (const auto& row : rows) {
      const std::string where = prefix + "n=" + std::to_string(row.n) + ": ";
      for (std::size_t l = 0; l < row.estimates.size(); ++l) {
        const auto& estimate = row.estimates[l];
        if (!(estimate.mean_k >= 0.0) || !(estimate.mean_k <= 0.5)) {
          violations.push_back(where + "mean outside [0, 0.5]");
        }
        if (!(estimate.sd_k >= 0.0)) {
          violations.push_back(where + "negative spread");
        }
        if (l > 0 && estimate.mean_k < row.estimates[l - 1].mean_k) {
          violations.push_back(where + "means decrease with the level");
        }
      }
    }

    // Across n the 0.90 and 0.95 columns decrease from the first row on;
    // the 0.98 and 0.99 columns peak at n=4, so their check starts there.
    for (std::size_t i = 1; i < rows.size(); ++i) {
      for (std::size_t l = 0; l < kTableLevels.size(); ++l) {
        const bool tail_column = kTableLevels[l] > 0.97;
        if (tail_column && rows[i - 1].n < 4) continue;
        if (row_mean(rows[i], l) > row_mean(rows[i - 1], l)) {
          violations.push_back(prefix + "K" +
                               std::to_string(static_cast<int>(
                                   std::lround(kTableLevels[l] * 100))) +
                               " increases from n=" +
                               std::to_string(rows[i - 1].n) + " to n=" +
                               std::to_string(rows[i].n));
        }
      }
    }
  }
  return violations;
}

}  // namespace chiral
