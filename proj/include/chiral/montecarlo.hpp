#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chiral/distribution.hpp"
#include "chiral/quantiles.hpp"
#include "chiral/random.hpp"

namespace chiral {

/// Two-level estimation protocol: per replicate, N chiral-index
/// observations are generated and the level quantiles extracted; the
/// table reports mean and standard deviation over R replicates.
struct SimulationConfig {
  DistributionSpec dist;
  std::vector<int> sample_sizes;
  int observations_per_replicate = 10000;               // N
  int replicates = 100;                                  // R
  std::vector<double> levels{kTableLevels.begin(), kTableLevels.end()};
  std::uint64_t master_seed = kDefaultMasterSeed;
};

/// Throws InvalidConfig unless N >= 100, R >= 2, every n >= 2, and every
/// level p satisfies 0 < p < 1 with p*N <= N-1.
void validate(const SimulationConfig& config);

/// One replicate: N samples of size n from `dist`, their chiral indices
/// sorted, and per level the estimate
///   K_p = (chi_(k:N) + chi_(k+1:N)) / 2   when p*N is integral, k = p*N,
///   K_p = chi_(ceil(p*N):N)               otherwise.
/// The midpoint rule reproduces the published estimator at N = 10000.
std::vector<double> replicate_quantiles(const DistributionSpec& dist, int n,
                                        int observations,
                                        std::span<const double> levels,
                                        GeneratorState& gen);

/// Runs R replicates per sample size (replicate r uses stream_index = r)
/// and aggregates mean_k and sd_k (divisor R-1) per level. Replicates are
/// distributed over `threads` workers (0 = hardware concurrency); the
/// result is a pure function of (config), bit-identical for any thread
/// count and any scheduling.
std::vector<QuantileTableRow> run_simulation(const SimulationConfig& config,
                                             unsigned threads = 0);

enum class TableFormat { paper_text, csv };

/// Renders rows either in the 9-column fixed 6-decimal text layout
/// ("paper-text") or as CSV `law,n,level,mean_K,sd_K` at full double
/// precision. Throws std::invalid_argument on empty rows.
std::string emit_table(Law law, std::span<const QuantileTableRow> rows,
                       TableFormat format);

struct ParsedTable {
  Law law = Law::uniform;
  std::vector<QuantileTableRow> rows;
};

/// Parses emit_table CSV output; round-trips exactly.
ParsedTable parse_csv_table(std::string_view text);

namespace detail {

/// The quantile rule applied by replicate_quantiles to its ascending
/// chi observations: midpoint of the k-th and (k+1)-th order statistics
/// when p*count is integral (k = round(p*count)), else the
/// ceil(p*count)-th order statistic. Indices clamp to the valid range.
double sorted_quantile(std::span<const double> ascending, double p) noexcept;

}  // namespace detail

}  // namespace chiral
