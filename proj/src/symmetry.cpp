#include "chiral/symmetry.hpp"

#include "chiral/chirality.hpp"

namespace chiral {

TestResult test_symmetry(const Sample& sample, Law law, double level,
                         LookupPolicy policy) {
  const ChiralIndexReport report = chiral_index(sample);
  TestResult result;
  result.chi = report.chi;
  result.n = static_cast<int>(report.n);
  result.law = law;
  result.level = level;
  result.policy = policy;
  result.critical = lookup_critical(law, result.n, level, policy);
  result.reject = result.chi > result.critical;
  for (double candidate : kTableLevels) {
    if (result.chi > lookup_critical(law, result.n, candidate, policy)) {
      result.max_rejected_level = candidate;  // ascending scan keeps the max
    }
  }
  return result;
}

}  // namespace chiral
