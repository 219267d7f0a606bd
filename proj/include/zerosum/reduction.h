// Block machinery for long t-avoiding sequences: the zero-sum block
// X = alpha^[beta/g] (-beta)^[alpha/g], appending blocks, the rewriting step
// that trades foreign elements for whole blocks, and block stripping.

#ifndef ZEROSUM_REDUCTION_H_
#define ZEROSUM_REDUCTION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "zerosum/detect.h"
#include "zerosum/sequence.h"

namespace zerosum {

struct BlockX {
  int64_t alpha = 1;
  int64_t beta = 1;  // the block's negative element is -beta
  int64_t g = 1;     // gcd(alpha, beta)
  BoundedSequence block;

  int64_t Length() const { return (alpha + beta) / g; }
  bool IsForeign(int64_t value) const {
    return value != alpha && value != -beta;
  }
};

struct FrequentPair {
  int64_t alpha = 0;
  int64_t beta = 0;
};

struct ReduceStepResult {
  BoundedSequence next;
  BoundedSequence removed;  // T
  int64_t blocks_inserted = 0;  // j, with |T| = j |X|
};

struct ReductionStep {
  BoundedSequence removed;
  int64_t blocks_inserted = 0;
};

struct ReductionTrace {
  BlockX block;
  BoundedSequence initial;
  std::vector<ReductionStep> steps;
  BoundedSequence fixpoint;
  BoundedSequence stripped;
  int64_t strip_count = 0;
};

struct StripResult {
  BoundedSequence stripped;
  int64_t count = 0;
};

// alpha > 0 and beta > 0 with (k+1) v_alpha >= k n and (k+1) v_{-beta} >= k n,
// k = s.bound(). Prefers the largest multiplicity, then the larger |value|.
// Throws std::invalid_argument unless sigma(s) = 0.
std::optional<FrequentPair> FrequentElements(const BoundedSequence& s,
                                             int64_t n);

// Requires 1 <= alpha, beta <= k; k defaults to max(alpha, beta).
BlockX BuildBlock(int64_t alpha, int64_t beta,
                  std::optional<int64_t> k = std::nullopt);

// s . X^[count].
BoundedSequence AppendBlocks(const BoundedSequence& s, const BlockX& x,
                             int64_t count);

// Block count used when the caller does not choose one: n * k.
int64_t DefaultBlockCount(int64_t n, int64_t k);

// One rewrite: finds a zero-sum T | s of length j|X| (j >= 1, smallest j
// first) that contains an element outside {alpha, -beta}, and replaces it by
// X^[j]. The search is exact: for each foreign value f (ascending) it asks
// the length-sum table of s minus one f for a subsequence of length
// j|X| - 1 and sum -f. Returns nullopt when no such T exists.
// Throws std::invalid_argument unless sigma(s) = 0.
std::optional<ReduceStepResult> ReduceStep(const BoundedSequence& s,
                                           const BlockX& x,
                                           const DetectOptions& options = {});

// Rewrites until no step applies, then strips whole blocks.
ReductionTrace ReduceFixpoint(const BoundedSequence& s, const BlockX& x,
                              const DetectOptions& options = {});

// Number of elements outside {alpha, -beta}.
int64_t ForeignCount(const BoundedSequence& s, const BlockX& x);

// Removes the maximal number of whole copies of x.block.
StripResult StripBlocks(const BoundedSequence& s, const BlockX& x);

// t . alpha^[a] . (-beta)^[b]: a is the least count with sigma(t) + a alpha
// divisible by beta and non-negative, b = (sigma(t) + a alpha) / beta.
// Throws std::invalid_argument unless g divides sigma(t).
BoundedSequence CompleteBlock(const BoundedSequence& t, const BlockX& x);

}  // namespace zerosum

#endif  // ZEROSUM_REDUCTION_H_
