#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chiral/distribution.hpp"
#include "chiral/quantiles.hpp"

namespace chiral {

enum class LookupPolicy { exact, interpolate };

/// Embedded reference quantiles for one law over the grid
/// n in {3..100} u {110, 120, ..., 1000} u {10000} (189 rows).
struct ReferenceTable {
  Law law = Law::uniform;
  std::vector<QuantileTableRow> rows;
};

/// Grid of tabulated sample sizes, ascending.
std::vector<int> reference_grid();

/// The embedded table for a law, parsed once and cached.
const ReferenceTable& reference_table(Law law);

/// Raw text of the embedded table (header line plus one row per n),
/// byte-identical to the data/ asset shipped alongside the binary.
std::string_view embedded_table_text(Law law) noexcept;

/// Critical value K̄ for (law, n, level).
///
/// exact: n must be a grid point (SampleSizeNotTabulated otherwise), so
/// the default policy never fabricates critical values. interpolate:
/// linear in 1/n between the bracketing grid points, exact on the grid.
/// Levels outside {0.90, 0.95, 0.98, 0.99} raise UnsupportedLevel; n
/// outside [3, 10000] raises SampleSizeOutOfRange under either policy.
double lookup_critical(Law law, int n, double level,
                       LookupPolicy policy = LookupPolicy::exact);

/// Integrity audit of the embedded data: grid shape, per-row level
/// monotonicity, value ranges, cross-n monotonicity where the tables are
/// monotone, and a pinned FNV-1a checksum per law. Returns human-readable
/// violations; empty means pristine.
std::vector<std::string> verify_embedded_tables();

namespace detail {

extern const char* const kUniformTableText;
extern const char* const kNormalTableText;

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Parses table text in the canonical format; used for the embedded data
/// and for auditing on-disk copies. Throws Error on malformed input.
std::vector<QuantileTableRow> parse_table_text(std::string_view text);

}  // namespace detail

}  // namespace chiral
