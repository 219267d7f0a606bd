// Bounded integer multisets ("sequences") and their basic arithmetic.
//
// A sequence is an unordered multiset of integers drawn from [-k, k]. It is
// stored as a value -> multiplicity map; element order carries no meaning
// anywhere in this library.

#ifndef ZEROSUM_SEQUENCE_H_
#define ZEROSUM_SEQUENCE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zerosum {

// Malformed sequence text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation refused because it would exceed a configured resource cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable k-bounded multiset of integers.
//
// Invariants: every stored value a has |a| <= bound(); every stored
// multiplicity is >= 1; Length() and bound() * Length() fit in int64_t.
class BoundedSequence {
 public:
  using Terms = std::map<int64_t, int64_t>;

  // Empty sequence with bound 1.
  BoundedSequence() = default;
  explicit BoundedSequence(int64_t bound);
  // Validates and takes ownership of `terms`. Zero multiplicities are
  // dropped; negative ones, out-of-bound values and overflow throw.
  BoundedSequence(int64_t bound, Terms terms);

  // value^[count] with the given bound (defaults to max(1, |value|)).
  static BoundedSequence Repeat(int64_t value, int64_t count,
                                std::optional<int64_t> bound = std::nullopt);

  int64_t bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int64_t Length() const { return length_; }
  int64_t Sum() const { return sum_; }
  int64_t Multiplicity(int64_t value) const;
  int64_t DistinctValues() const { return static_cast<int64_t>(terms_.size()); }

  // Same terms under a different bound; throws if a term violates it.
  BoundedSequence WithBound(int64_t bound) const;
  // Every value negated.
  BoundedSequence Negated() const;
  // Adds `count` copies of `value` (bound widens to fit).
  BoundedSequence With(int64_t value, int64_t count) const;

  friend bool operator==(const BoundedSequence&,
                         const BoundedSequence&) = default;

 private:
  int64_t bound_ = 1;
  Terms terms_;
  int64_t length_ = 0;
  int64_t sum_ = 0;
};

// Canonical ordering used wherever lists of sequences are reported.
bool CanonicalLess(const BoundedSequence& a, const BoundedSequence& b);

// S+, S- and |S0| of a sequence.
struct SignPartition {
  BoundedSequence positive;
  BoundedSequence negative;
  int64_t zeros = 0;
};

// Grammar: term ("," term)*, term := integer ["^" positive-integer].
// Whitespace is ignored and repeated terms accumulate. Without `bound` the
// bound is max(1, max |value|). The empty string is the empty sequence.
BoundedSequence ParseSequence(std::string_view text,
                              std::optional<int64_t> bound = std::nullopt);

// "value^mult" terms in ascending value order, comma separated.
std::string FormatSequence(const BoundedSequence& s);

int64_t Sigma(const BoundedSequence& s);

// Pointwise multiplicity sum; result bound is the larger of the two.
BoundedSequence Concat(const BoundedSequence& s, const BoundedSequence& t);

// Pointwise multiplicity difference. Throws std::invalid_argument unless
// IsSubsequence(t, s).
BoundedSequence Remove(const BoundedSequence& s, const BoundedSequence& t);

// True iff v_a(t) <= v_a(s) for every a.
bool IsSubsequence(const BoundedSequence& t, const BoundedSequence& s);

SignPartition SplitBySign(const BoundedSequence& s);

// s with t removed. For zero-sum s the result sums to -Sigma(t).
BoundedSequence Complement(const BoundedSequence& t, const BoundedSequence& s);

}  // namespace zerosum

#endif  // ZEROSUM_SEQUENCE_H_
