#pragma once

#include <Eigen/Core>

#include <string_view>

#include "chiral/sample.hpp"

namespace chiral {

enum class Method {
  sort_correlate,      // correlation of the ascending with the descending sort
  midrange_variance,   // studentized variance of the midranges
  halfrange_variance,  // one minus the studentized half-length sum of squares
  brute_force,         // minimum correlation over all permutations
};

std::string_view to_string(Method method) noexcept;

/// Result of a chiral index computation.
///
/// chi = (1 + r_m) / 2 exactly by construction, with r_m in [-1, 0] and
/// chi in [0, 1/2] up to floating-point tolerance.
struct ChiralIndexReport {
  double chi = 0.0;
  double r_m = 0.0;
  Eigen::Index n = 0;
  Method method = Method::sort_correlate;
};

/// Chiral index via sort-correlate: sort ascending, correlate with the
/// descending sort, add 1, halve. Two-pass centered sums throughout.
/// Throws DegenerateSample (n < 2) or ZeroInertia (all values equal).
ChiralIndexReport chiral_index(const Sample& sample);

/// Same index through the variance of the midranges:
/// chi = [sum M_i^2 - n*mean^2] / (n*sigma^2).
ChiralIndexReport chiral_index_midrange(const Sample& sample);

/// Same index through the half range lengths:
/// chi = 1 - [sum L_i^2] / (n*sigma^2).
ChiralIndexReport chiral_index_halfrange(const Sample& sample);

/// Minimum Pearson correlation between the sample and a permutation of
/// itself, by exhaustive enumeration. Oracle for the sort-correlate r_m;
/// factorial cost, so n is capped (TooLargeForBruteForce beyond max_n).
double min_correlation_bruteforce(const Sample& sample, int max_n = 8);

namespace detail {

/// r_m of an already sorted, non-degenerate sequence. No validation and
/// no allocation; callers must guarantee front() < back().
double min_correlation_of_sorted(Eigen::Ref<const Eigen::ArrayXd> sorted);

}  // namespace detail

}  // namespace chiral
