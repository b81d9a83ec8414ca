#include "chiral/distribution.hpp"

#include <cmath>
#include <string>

#include "chiral/errors.hpp"

namespace chiral {

std::string_view to_string(Law law) noexcept {
  return law == Law::uniform ? "uniform" : "normal";
}

std::optional<Law> parse_law(std::string_view name) noexcept {
  if (name == "uniform") return Law::uniform;
  if (name == "normal") return Law::normal;
  return std::nullopt;
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidDistribution("uniform(a, b) requires finite a < b, got a=" +
                              std::to_string(a) + " b=" + std::to_string(b));
  }
  return {Law::uniform, a, b};
}

DistributionSpec DistributionSpec::normal(double m, double s) {
  if (!std::isfinite(m) || !std::isfinite(s) || !(s > 0.0)) {
    throw InvalidDistribution("normal(m, s) requires finite m and s > 0, got m=" +
                              std::to_string(m) + " s=" + std::to_string(s));
  }
  return {Law::normal, m, s};
}

}  // namespace chiral
