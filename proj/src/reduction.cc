#include "zerosum/reduction.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zerosum {
namespace {

void RequireZeroSum(const BoundedSequence& s, const char* op) {
  if (s.Sum() != 0) {
    throw std::invalid_argument(std::string(op) +
                                ": sequence must be zero-sum, sum is " +
                                std::to_string(s.Sum()));
  }
}

int64_t CheckedMul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow");
  }
  return out;
}

}  // namespace

std::optional<FrequentPair> FrequentElements(const BoundedSequence& s,
                                             int64_t n) {
  RequireZeroSum(s, "frequent_elements");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const __int128 k = s.bound();
  const __int128 need = k * n;
  // Best candidate per sign: (multiplicity, |value|) compared
  // lexicographically.
  int64_t alpha = 0, alpha_mult = -1;
  int64_t beta = 0, beta_mult = -1;
  for (const auto& [value, mult] : s.terms()) {
    if (value == 0 || (k + 1) * mult < need) continue;
    const int64_t mag = value < 0 ? -value : value;
    if (value > 0) {
      if (mult > alpha_mult || (mult == alpha_mult && mag > alpha)) {
        alpha = mag;
        alpha_mult = mult;
      }
    } else if (mult > beta_mult || (mult == beta_mult && mag > beta)) {
      beta = mag;
      beta_mult = mult;
    }
  }
  if (alpha_mult < 0 || beta_mult < 0) return std::nullopt;
  return FrequentPair{alpha, beta};
}

BlockX BuildBlock(int64_t alpha, int64_t beta, std::optional<int64_t> k) {
  const int64_t bound = k.value_or(std::max(alpha, beta));
  if (alpha < 1 || beta < 1 || alpha > bound || beta > bound) {
    throw std::invalid_argument("block needs 1 <= alpha, beta <= k");
  }
  BlockX x;
  x.alpha = alpha;
  x.beta = beta;
  x.g = std::gcd(alpha, beta);
  x.block = BoundedSequence(
      bound, BoundedSequence::Terms{{alpha, beta / x.g}, {-beta, alpha / x.g}});
  return x;
}

BoundedSequence AppendBlocks(const BoundedSequence& s, const BlockX& x,
                             int64_t count) {
  if (count < 0) throw std::invalid_argument("block count must be >= 0");
  BoundedSequence::Terms terms = s.terms();
  for (const auto& [value, mult] : x.block.terms()) {
    int64_t& slot = terms[value];
    if (__builtin_add_overflow(slot, CheckedMul(mult, count), &slot)) {
      throw std::overflow_error("append_blocks: length overflow");
    }
  }
  return BoundedSequence(std::max(s.bound(), x.block.bound()),
                         std::move(terms));
}

int64_t DefaultBlockCount(int64_t n, int64_t k) { return CheckedMul(n, k); }

std::optional<ReduceStepResult> ReduceStep(const BoundedSequence& s,
                                           const BlockX& x,
                                           const DetectOptions& options) {
  RequireZeroSum(s, "reduce_step");
  const int64_t xl = x.Length();
  const int64_t max_j = s.Length() / xl;
  if (max_j < 1) return std::nullopt;

  // Forcing one copy of a foreign value f into T turns "T contains a
  // foreign element" into a plain length-sum query on s minus that f.
  struct Forced {
    int64_t value;
    BoundedSequence rest;
    LengthSumTable table;
  };
  std::vector<Forced> forced;
  for (const auto& [value, mult] : s.terms()) {
    if (!x.IsForeign(value)) continue;
    BoundedSequence rest =
        Remove(s, BoundedSequence(s.bound(), BoundedSequence::Terms{{value, 1}}));
    LengthSumTable table = BuildTable(rest, max_j * xl - 1, options);
    forced.push_back(Forced{value, std::move(rest), std::move(table)});
  }
  if (forced.empty()) return std::nullopt;

  for (int64_t j = 1; j <= max_j; ++j) {
    for (const Forced& f : forced) {
      std::optional<BoundedSequence> tail = f.table.Extract(j * xl - 1, -f.value);
      if (!tail) continue;
      BoundedSequence removed = tail->With(f.value, 1).WithBound(s.bound());
      BoundedSequence next = AppendBlocks(Remove(s, removed), x, j);
      return ReduceStepResult{std::move(next), std::move(removed), j};
    }
  }
  return std::nullopt;
}

ReductionTrace ReduceFixpoint(const BoundedSequence& s, const BlockX& x,
                              const DetectOptions& options) {
  RequireZeroSum(s, "reduce_fixpoint");
  ReductionTrace trace;
  trace.block = x;
  trace.initial = s;
  BoundedSequence current = s;
  // v_alpha + v_{-beta} rises by at least one per step and never exceeds |s|.
  while (auto step = ReduceStep(current, x, options)) {
    trace.steps.push_back(ReductionStep{step->removed, step->blocks_inserted});
    current = std::move(step->next);
    if (static_cast<int64_t>(trace.steps.size()) > s.Length()) {
      throw std::logic_error("reduce_fixpoint: step bound exceeded");
    }
  }
  trace.fixpoint = current;
  StripResult strip = StripBlocks(current, x);
  trace.stripped = std::move(strip.stripped);
  trace.strip_count = strip.count;
  return trace;
}

int64_t ForeignCount(const BoundedSequence& s, const BlockX& x) {
  int64_t count = 0;
  for (const auto& [value, mult] : s.terms()) {
    if (x.IsForeign(value)) count += mult;
  }
  return count;
}

StripResult StripBlocks(const BoundedSequence& s, const BlockX& x) {
  const int64_t per_alpha = x.beta / x.g;
  const int64_t per_beta = x.alpha / x.g;
  const int64_t count = std::min(s.Multiplicity(x.alpha) / per_alpha,
                                 s.Multiplicity(-x.beta) / per_beta);
  BoundedSequence::Terms terms = s.terms();
  terms[x.alpha] -= count * per_alpha;
  terms[-x.beta] -= count * per_beta;
  return StripResult{BoundedSequence(s.bound(), std::move(terms)), count};
}

BoundedSequence CompleteBlock(const BoundedSequence& t, const BlockX& x) {
  const int64_t sum = t.Sum();
  if (sum % x.g != 0) {
    throw std::invalid_argument("complete_block: gcd(alpha, beta) = " +
                                std::to_string(x.g) + " does not divide " +
                                std::to_string(sum));
  }
  // Residues of a*alpha mod beta cycle with period beta/g, so the least
  // solution is below beta/g.
  int64_t a = 0;
  while (((sum + a * x.alpha) % x.beta + x.beta) % x.beta != 0) ++a;
  // Adding beta/g more alphas keeps divisibility by beta; pad until the
  // running sum is non-negative so b >= 0.
  const int64_t period = x.beta / x.g;
  if (sum + a * x.alpha < 0) {
    const int64_t deficit = -(sum + a * x.alpha);
    const int64_t step = period * x.alpha;
    a += period * ((deficit + step - 1) / step);
  }
  const int64_t b = (sum + a * x.alpha) / x.beta;
  BoundedSequence::Terms terms = t.terms();
  if (a > 0) terms[x.alpha] += a;
  if (b > 0) terms[-x.beta] += b;
  return BoundedSequence(std::max(t.bound(), x.block.bound()),
                         std::move(terms));
}

}  // namespace zerosum
