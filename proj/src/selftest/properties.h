// Randomized and exhaustive property suites over the library. Shared by the
// unit tests, the acceptance suite and `zss selftest`.

#ifndef ZEROSUM_SELFTEST_PROPERTIES_H_
#define ZEROSUM_SELFTEST_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <vector>

namespace zerosum::selftest {

struct PropertyOutcome {
  std::string name;
  int64_t cases = 0;
  int64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct PropertyConfig {
  uint64_t seed = 20170623;
  int64_t cases = 10000;
  // Fixpoint foreign-count suite; each case runs a full reduction.
  int64_t foreign_cases = 1000;
  int64_t davenport_cases = 100000;
};

// (k+1)|S+| <= k|S|, (k+1)|S-| <= k|S|, and the S0-augmented lower bounds,
// on random zero-sum sequences.
PropertyOutcome CheckSignRatios(const PropertyConfig& config);

// l in spectrum(s) iff |s| - l in spectrum(s) for zero-sum s, plus the
// complement-duality self-test at a random t.
PropertyOutcome CheckSpectrumSymmetry(const PropertyConfig& config);

// DP spectrum equals the brute-force spectrum for every multiset over
// [-k, k] with at most `max_elements` elements. Exhaustive, not sampled.
PropertyOutcome CheckSpectrumAgainstOracle(int64_t k, int64_t max_elements);

// Witnesses are valid subsequences of the requested length with sum zero.
PropertyOutcome CheckWitnessValidity(const PropertyConfig& config);

PropertyOutcome CheckDavenportBlocks(const PropertyConfig& config);

// Length and sum preserved step by step, v_alpha + v_{-beta} strictly
// increasing, at most |s| steps, no reducible T left (brute force for small
// fixpoints), strip dichotomy.
PropertyOutcome CheckReduceFixpoints(const PropertyConfig& config);

// Fewer than alpha + beta foreign elements survive at fixpoints of
// S . X^[n k] where alpha, -beta are frequent in S.
PropertyOutcome CheckFixpointForeignCount(const PropertyConfig& config);

// Appending blocks keeps an n-avoiding sequence n-avoiding when alpha and
// -beta each occur at least k n / (k+1) times.
PropertyOutcome CheckBlockAppendAvoidance(const PropertyConfig& config);

std::vector<PropertyOutcome> RunAll(const PropertyConfig& config);

}  // namespace zerosum::selftest

#endif  // ZEROSUM_SELFTEST_PROPERTIES_H_
