// Exhaustive searches over k-bounded zero-sum sequences.
//
// Sequences are enumerated as multiplicity vectors, one length level at a
// time, slots filled in the order k, -k, k-1, -(k-1), ..., 1, -1, 0. The last
// two slots are forced by the sum and the length. Pruning at inner nodes:
//   - the remaining slots can still bring the sum back to zero;
//   - (k+1)|S+| <= k|S| and (k+1)|S-| <= k|S| for the finished sequence;
//   - the fixed part has no zero-sum subsequence of length t or n = |S| - t
//     (both are subsequences of every completion);
//   - v_0 < n at the leaf.

#ifndef ZEROSUM_SEARCH_H_
#define ZEROSUM_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zerosum/detect.h"
#include "zerosum/reduction.h"
#include "zerosum/sequence.h"

namespace zerosum {

struct SearchProgress {
  int64_t level = 0;  // sequence length being scanned
  int64_t nodes = 0;
  std::optional<int64_t> best;
};

struct SearchOptions {
  // 0 means unlimited.
  int64_t node_limit = 0;
  double time_limit_seconds = 0;
  int threads = 1;
  // Witnesses reported per result: the first ones met in enumeration order,
  // then sorted canonically.
  int max_witnesses = 16;
  // k = 3 searches are large; they must be requested explicitly.
  bool allow_long_running = false;
  // Called roughly every `progress_interval` nodes, serialized.
  std::function<void(const SearchProgress&)> progress;
  int64_t progress_interval = 1 << 20;
};

struct SearchResult {
  int64_t k = 0;
  int64_t t = 0;
  int64_t ceiling = 0;
  int64_t best_length = 0;
  std::vector<BoundedSequence> witnesses;
  // Every length in (best_length, ceiling] was scanned completely and
  // best_length < ceiling.
  bool exhaustive = false;
  bool cap_hit = false;
  int64_t nodes_explored = 0;
};

// Zero-sum t-avoiding sequences of one exact length.
struct LevelScan {
  int64_t k = 0;
  int64_t t = 0;
  int64_t length = 0;
  // Exact count when `complete`.
  int64_t count = 0;
  std::vector<BoundedSequence> sequences;  // first found, sorted canonically
  bool complete = false;
  int64_t nodes = 0;
};

struct ExtremalReport {
  int64_t k = 0;
  int64_t t = 0;
  int64_t length = 0;  // t + k^2 - k - 1
  std::vector<BoundedSequence> sequences;
  // Every sequence has support in {-1, k-1, k} or in {1, -(k-1), -k}.
  bool support_ok = false;
  // k = 1 makes the support sets {-1, 0, 1}, which says nothing.
  bool degenerate = false;
  bool complete = false;
};

struct FamilySpec {
  int64_t k = 0;
  int64_t t = 0;
  int64_t q = 0;  // prime power <= max(2, 2k-1) not dividing t
  int64_t a = 0;
  int64_t b = 0;
  BlockX generator;
};

struct Family {
  FamilySpec spec;
  int64_t copies = 0;
  BoundedSequence sequence;  // generator.block^[copies]
  bool verified_avoiding = false;
};

struct FrobeniusCheck {
  bool dp_avoiding = false;
  bool frobenius_avoiding = false;
  bool agree() const { return dp_avoiding == frobenius_avoiding; }
};

struct GreedyBoundRow {
  int64_t k = 0, alpha = 0, beta = 0, g = 0;
  int64_t maxpos = 0;
  int64_t alpha_copies = 0;
  int64_t maxpos_copies = 0;
  int64_t beta_copies = 0;
  // alpha*alpha_copies + maxpos*maxpos_copies - beta*beta_copies
  int64_t best_sum = 0;
  bool counterexample() const { return best_sum >= 0; }
};

// Scans zero-sum sequences over [-k, k] of exactly `length` elements for
// t-avoiding ones. `max_sequences` < 0 keeps all of them.
LevelScan ScanAvoidingAtLength(int64_t k, int64_t t, int64_t length,
                               const SearchOptions& options = {},
                               int64_t max_sequences = -1);

// Longest zero-sum t-avoiding sequence up to `ceiling`, scanning levels
// from the ceiling down. Requires ceiling >= t; k >= 3 needs
// allow_long_running.
SearchResult LongestAvoiding(int64_t k, int64_t t, int64_t ceiling,
                             const SearchOptions& options = {});

// All t-avoiding zero-sum sequences of length t + k^2 - k - 1. Requires the
// divisibility condition; k <= 2, or k = 3 with allow_long_running.
ExtremalReport EnumerateExtremal(int64_t k, int64_t t,
                                 const SearchOptions& options = {});

// True iff every value of s lies in {-1, k-1, k} or every value lies in
// {1, -(k-1), -k}.
bool HasExtremalSupport(const BoundedSequence& s, int64_t k);

// Decides t-avoidance of s (support within {-1, k-1, k}, zero-sum) both with
// the DP and by solving (k+1) i + k j = t with i <= v_k, j <= v_{k-1},
// k i + (k-1) j <= v_{-1}.
FrobeniusCheck VerifyFrobeniusAvoidance(int64_t k, int64_t t,
                                        const BoundedSequence& s);

// Parameters of the divergent family; throws std::invalid_argument when
// the divisibility condition holds.
FamilySpec FamilyParameters(int64_t k, int64_t t);

// generator.block^[N] with N * q >= min_length, checked t-avoiding.
Family FamilyGenerator(int64_t k, int64_t t, int64_t min_length,
                       const DetectOptions& options = {});

GreedyBoundRow GreedyBoundEvaluate(int64_t k, int64_t alpha, int64_t beta);

// Every row for k in {4,5,6}, beta in [2,k], alpha in [1,k], in loop order.
std::vector<GreedyBoundRow> GreedyBoundTable();

// Rows of GreedyBoundTable() whose greedy best sum is non-negative.
std::vector<GreedyBoundRow> GreedyCounterexampleSearch();

}  // namespace zerosum

#endif  // ZEROSUM_SEARCH_H_
