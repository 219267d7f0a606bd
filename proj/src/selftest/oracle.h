// Brute-force reference implementations. Nothing here touches the DP
// kernel: every answer comes from enumerating sub-multisets directly.

#ifndef ZEROSUM_SELFTEST_ORACLE_H_
#define ZEROSUM_SELFTEST_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "zerosum/sequence.h"

namespace zerosum::oracle {

// Calls `visit` once per sub-multiset T | s (prod (v_a + 1) calls) with the
// multiplicity vector aligned to s.terms() order.
void ForEachSubsequence(
    const BoundedSequence& s,
    const std::function<void(const std::vector<int64_t>& values,
                             const std::vector<int64_t>& counts)>& visit);

std::set<std::pair<int64_t, int64_t>> LengthSums(const BoundedSequence& s);

std::vector<int64_t> Spectrum(const BoundedSequence& s);

bool Contains(const BoundedSequence& s, int64_t t);

// Some zero-sum T | s with |T| a positive multiple of `block_length` that
// holds a value outside {alpha, -beta}.
std::optional<BoundedSequence> ReducibleSubsequence(const BoundedSequence& s,
                                                    int64_t alpha,
                                                    int64_t beta,
                                                    int64_t block_length);

// Largest integer not of the form a x + b y with x, y >= 0, by sieving up
// to a*b.
int64_t FrobeniusBySieve(int64_t a, int64_t b);

// Zero-sum sequence over [-k, k] of exactly `length` elements: uniform
// draws followed by sum repair.
BoundedSequence RandomZeroSum(std::mt19937_64& rng, int64_t k, int64_t length);

}  // namespace zerosum::oracle

#endif  // ZEROSUM_SELFTEST_ORACLE_H_
