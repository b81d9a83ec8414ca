#pragma once

#include <array>
#include <vector>

namespace chiral {

/// The four tabulated confidence levels.
inline constexpr std::array<double, 4> kTableLevels{0.90, 0.95, 0.98, 0.99};

/// One estimated quantile of the chiral index sampling distribution:
/// mean and standard deviation (divisor R-1) over replicates.
struct QuantileEstimate {
  double level = 0.0;
  double mean_k = 0.0;
  double sd_k = 0.0;
};

/// Per-sample-size table row; estimates ordered by level.
struct QuantileTableRow {
  int n = 0;
  std::vector<QuantileEstimate> estimates;
};

}  // namespace chiral
