// Exact-length zero-sum subsequence detection.
//
// The kernel is a bounded-multiplicity subset-sum DP over (count, sum)
// pairs. Each count row is a bitset over sums in [-k*c, k*c] so that adding
// copies of a value is a word-parallel shift-or. Multiplicities are folded in
// with a binary (1, 2, 4, ...) decomposition.

#ifndef ZEROSUM_DETECT_H_
#define ZEROSUM_DETECT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zerosum/sequence.h"

namespace zerosum {

struct DetectOptions {
  // Tables whose estimated footprint exceeds this are refused with
  // ResourceLimitError.
  size_t memory_limit_bytes = size_t{1} << 30;
};

// One (count, sum) reachability layer: rows 0..max_count, each a bitset over
// sums -bound*max_count .. bound*max_count.
class ReachGrid {
 public:
  ReachGrid() = default;
  // Only (0, 0) reachable.
  ReachGrid(int64_t bound, int64_t max_count);

  static size_t EstimateBytes(int64_t bound, int64_t max_count);

  int64_t bound() const { return bound_; }
  int64_t max_count() const { return max_count_; }

  bool Test(int64_t count, int64_t sum) const;
  // Folds in up to `mult` copies of `value` (|value| <= bound).
  void AddCopies(int64_t value, int64_t mult);

 private:
  void OrShiftedRow(int64_t dst_row, int64_t src_row, int64_t shift);

  int64_t bound_ = 0;
  int64_t max_count_ = 0;
  int64_t offset_ = 0;
  size_t words_ = 0;
  uint64_t last_mask_ = 0;
  std::vector<uint64_t> bits_;
};

// All (|T|, sigma(T)) pairs over subsequences T | source with |T| <= cap,
// retaining one layer per distinct value so witnesses can be recovered.
class LengthSumTable {
 public:
  static LengthSumTable Build(const BoundedSequence& source,
                              int64_t max_length,
                              const DetectOptions& options = {});

  const BoundedSequence& source() const { return source_; }
  int64_t max_length() const { return max_length_; }

  bool Reachable(int64_t count, int64_t sum) const;
  // Every reachable pair, ordered by count then sum.
  std::vector<std::pair<int64_t, int64_t>> ReachablePairs() const;
  // A subsequence with the given length and sum, if one exists. Backtracks
  // from the last value to the first, taking the fewest copies that keep
  // the remainder reachable.
  std::optional<BoundedSequence> Extract(int64_t count, int64_t sum) const;

 private:
  LengthSumTable() = default;

  BoundedSequence source_;
  int64_t max_length_ = 0;
  std::vector<int64_t> values_;
  std::vector<int64_t> mults_;
  std::vector<ReachGrid> layers_;  // layers_[i]: first i distinct values.
};

struct Witness {
  BoundedSequence subsequence;
  int64_t target_length = 0;
};

// Every length of a zero-sum subsequence, ascending. Always contains 0.
struct Spectrum {
  std::vector<int64_t> lengths;

  bool Contains(int64_t length) const;
};

LengthSumTable BuildTable(const BoundedSequence& s, int64_t max_length,
                          const DetectOptions& options = {});

// A zero-sum T | s with |T| = t, or nullopt when s is t-avoiding. Negative t
// and t > |s| yield nullopt.
std::optional<Witness> FindZeroSumOfLength(const BoundedSequence& s,
                                           int64_t t,
                                           const DetectOptions& options = {});

bool IsTAvoiding(const BoundedSequence& s, int64_t t,
                 const DetectOptions& options = {});

Spectrum ComputeSpectrum(const BoundedSequence& s,
                         const DetectOptions& options = {});

// Self-test of the complement argument: for zero-sum s, s is t-avoiding iff
// it is (|s| - t)-avoiding. Throws std::invalid_argument unless sigma(s) = 0
// and 0 <= t <= |s|.
bool CheckComplementDuality(const BoundedSequence& s, int64_t t,
                            const DetectOptions& options = {});

}  // namespace zerosum

#endif  // ZEROSUM_DETECT_H_
