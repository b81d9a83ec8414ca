#include "chiral/chirality.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace chiral {

namespace {

// Sorted copy of the values, rejecting sizes and inertia the index does
// not admit. All three routes start here.
Eigen::ArrayXd sorted_or_throw(const Sample& sample) {
  if (sample.size() < 2) {
    throw DegenerateSample("chiral index needs at least 2 observations, got " +
                           std::to_string(sample.size()));
  }
  Eigen::ArrayXd sorted = sample.values();
  std::sort(sorted.begin(), sorted.end());
  if (sorted(0) == sorted(sorted.size() - 1)) {
    throw ZeroInertia("all observations equal: inertia is null");
  }
  return sorted;
}

ChiralIndexReport report_from_r(double r_m, Eigen::Index n, Method method) {
  return ChiralIndexReport{(1.0 + r_m) / 2.0, r_m, n, method};
}

ChiralIndexReport report_from_chi(double chi, Eigen::Index n, Method method) {
  // Round-trip through r_m so the pair satisfies chi == (1 + r_m) / 2
  // bitwise; moves chi by at most 2^-54.
  const double r_m = 2.0 * chi - 1.0;
  return ChiralIndexReport{(1.0 + r_m) / 2.0, r_m, n, method};
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::sort_correlate:
      return "sort-correlate";
    case Method::midrange_variance:
      return "midrange-variance";
    case Method::halfrange_variance:
      return "halfrange-variance";
    case Method::brute_force:
      return "brute-force";
  }
  return "unknown";
}

namespace detail {

double min_correlation_of_sorted(Eigen::Ref<const Eigen::ArrayXd> sorted) {
  // Both copies share the variance, so the correlation denominator is the
  // centered sum of squares itself.
  const double mean = sorted.mean();
  const auto dev = sorted - mean;
  const double ssq = dev.square().sum();
  const double cross = (dev * dev.reverse()).sum();
  return cross / ssq;
}

}  // namespace detail

ChiralIndexReport chiral_index(const Sample& sample) {
  const Eigen::ArrayXd sorted = sorted_or_throw(sample);
  const double r_m = detail::min_correlation_of_sorted(sorted);
  return report_from_r(r_m, sample.size(), Method::sort_correlate);
}

ChiralIndexReport chiral_index_midrange(const Sample& sample) {
  const Eigen::ArrayXd sorted = sorted_or_throw(sample);
  const double mean = sorted.mean();
  const auto dev = sorted - mean;
  // midranges of the centered sequence are the centered midranges, so the
  // numerator sum M_i^2 - n*mean^2 is accumulated without cancellation
  const double chi =
      ((dev + dev.reverse()) / 2.0).square().sum() / dev.square().sum();
  return report_from_chi(chi, sample.size(), Method::midrange_variance);
}

ChiralIndexReport chiral_index_halfrange(const Sample& sample) {
  const Eigen::ArrayXd sorted = sorted_or_throw(sample);
  const double mean = sorted.mean();
  const auto dev = sorted - mean;
  // half lengths are translation invariant; centering only stabilizes sigma
  const double chi =
      1.0 - ((dev.reverse() - dev) / 2.0).square().sum() / dev.square().sum();
  return report_from_chi(chi, sample.size(), Method::halfrange_variance);
}

double min_correlation_bruteforce(const Sample& sample, int max_n) {
  const Eigen::Index n = sample.size();
  if (n < 2) {
    throw DegenerateSample("brute force needs at least 2 observations, got " +
                           std::to_string(n));
  }
  if (n > max_n) {
    throw TooLargeForBruteForce("n = " + std::to_string(n) +
                                " exceeds the brute-force cap of " +
                                std::to_string(max_n));
  }

  const Eigen::ArrayXd& x = sample.values();
  if (x.maxCoeff() == x.minCoeff()) {
    throw ZeroInertia("all observations equal: inertia is null");
  }

  const double mean = x.mean();
  const Eigen::ArrayXd dev = x - mean;
  const double ssq = dev.square().sum();

  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});

  double min_cross = ssq;  // identity permutation
  do {
    double cross = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      cross += dev(i) * dev(perm[static_cast<std::size_t>(i)]);
    }
    min_cross = std::min(min_cross, cross);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return min_cross / ssq;
}

}  // namespace chiral
