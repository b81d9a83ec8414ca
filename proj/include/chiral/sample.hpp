#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <span>

#include "chiral/errors.hpp"

namespace chiral {

/// A univariate sample of real observations, in input order.
///
/// Construction rejects NaN and infinities (NonFiniteInput). Size
/// constraints are enforced by the operations, not the container:
/// the chiral index needs n >= 2, table-based testing needs n >= 3.
class Sample {
 public:
  explicit Sample(Eigen::ArrayXd values);
  explicit Sample(std::span<const double> values);
  Sample(std::initializer_list<double> values);

  const Eigen::ArrayXd& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }

 private:
  Eigen::ArrayXd values_;
};

/// Order statistics of a sample together with the derived sequences.
///
/// sigma uses the population convention (divisor n, not n-1): the index
/// formulas divide by n*sigma^2, so anything else would change chi.
///
/// midranges[i]    = (x_(i+1) + x_(n-i)) / 2   (1-based order statistics)
/// half_lengths[i] = (x_(n-i) - x_(i+1)) / 2, negative past the middle
struct OrderedSample {
  Eigen::ArrayXd sorted_values;  // nondecreasing
  double mean = 0.0;
  double sigma = 0.0;            // divisor n
  Eigen::ArrayXd midranges;      // symmetric: M_i == M_{n+1-i}
  Eigen::ArrayXd half_lengths;   // antisymmetric: L_i == -L_{n+1-i}
};

/// Sorts the sample and computes mean, sigma, midranges and half lengths.
/// Throws DegenerateSample when n < 2.
OrderedSample order_statistics(const Sample& sample);

}  // namespace chiral
