#pragma once

#include <optional>
#include <string_view>

namespace chiral {

enum class Law { uniform, normal };

std::string_view to_string(Law law) noexcept;
std::optional<Law> parse_law(std::string_view name) noexcept;

/// Parent law descriptor: uniform(a, b) with a < b, or normal(m, s) with
/// s > 0. Factory functions validate and throw InvalidDistribution.
struct DistributionSpec {
  Law law = Law::uniform;
  double param1 = 0.0;  // a for uniform, m for normal
  double param2 = 1.0;  // b for uniform, s for normal

  static DistributionSpec uniform(double a, double b);
  static DistributionSpec normal(double m, double s);
};

}  // namespace chiral
