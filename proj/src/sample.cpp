#include "chiral/sample.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace chiral {

namespace {

void require_finite(const Eigen::ArrayXd& values) {
  if (!values.isFinite().all()) {
    throw NonFiniteInput("sample contains NaN or infinite values");
  }
}

}  // namespace

Sample::Sample(Eigen::ArrayXd values) : values_(std::move(values)) {
  require_finite(values_);
}

Sample::Sample(std::span<const double> values)
    : Sample(Eigen::ArrayXd{Eigen::Map<const Eigen::ArrayXd>(
          values.data(), static_cast<Eigen::Index>(values.size()))}) {}

Sample::Sample(std::initializer_list<double> values)
    : Sample(std::span<const double>(values.begin(), values.size())) {}

OrderedSample order_statistics(const Sample& sample) {
  const Eigen::Index n = sample.size();
  if (n < 2) {
    throw DegenerateSample("need at least 2 observations, got " +
                           std::to_string(n));
  }

  OrderedSample out;
  out.sorted_values = sample.values();
  std::sort(out.sorted_values.begin(), out.sorted_values.end());

  out.mean = out.sorted_values.mean();
  // population convention: divisor n, matching the n*sigma^2 denominators
  out.sigma =
      std::sqrt((out.sorted_values - out.mean).square().sum() /
                static_cast<double>(n));

  const auto& x = out.sorted_values;
  out.midranges = (x + x.reverse()) / 2.0;
  out.half_lengths = (x.reverse() - x) / 2.0;
  return out;
}

}  // namespace chiral
