#pragma once

#include <optional>

#include "chiral/sample.hpp"
#include "chiral/tables.hpp"

namespace chiral {

/// Outcome of the symmetry test. Rejection uses the strict inequality
/// chi > critical: the index must exceed the tabulated quantile, ties do
/// not reject. max_rejected_level is the largest tabulated level whose
/// critical value chi still exceeds (empty when not even 0.90 rejects).
struct TestResult {
  double chi = 0.0;
  int n = 0;
  Law law = Law::uniform;
  double level = 0.0;
  double critical = 0.0;
  bool reject = false;
  LookupPolicy policy = LookupPolicy::exact;
  std::optional<double> max_rejected_level;
};

/// Computes the sample's chiral index, looks up the critical value for
/// (law, n, level) and decides. One-sided by construction: only a large
/// index is evidence against symmetry. Propagates ZeroInertia and the
/// lookup errors (UnsupportedLevel, SampleSizeNotTabulated, ...).
TestResult test_symmetry(const Sample& sample, Law law, double level,
                         LookupPolicy policy = LookupPolicy::exact);

}  // namespace chiral
