#include "zerosum/reduction.h"

#include <gtest/gtest.h>

#include <random>

#include "selftest/oracle.h"

namespace zerosum {
namespace {

BoundedSequence S(const char* text, std::optional<int64_t> k = std::nullopt) {
  return ParseSequence(text, k);
}

TEST(FrequentElements, Examples) {
  const auto pair = FrequentElements(S("2^40,-1^80"), 10);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->alpha, 2);
  EXPECT_EQ(pair->beta, 1);

  EXPECT_FALSE(FrequentElements(S("1^1,-1^1"), 100).has_value());

  const auto four = FrequentElements(S("4^10,-1^40"), 12);
  ASSERT_TRUE(four.has_value());
  EXPECT_EQ(four->alpha, 4);
  EXPECT_EQ(four->beta, 1);
}

TEST(FrequentElements, ThresholdIsExact) {
  // k = 2: need 3 v >= 2 n. v = 4 allows n = 6 but not n = 7.
  const BoundedSequence s = S("1^4,-1^4", 2);
  EXPECT_TRUE(FrequentElements(s, 6).has_value());
  EXPECT_FALSE(FrequentElements(s, 7).has_value());
  EXPECT_THROW(FrequentElements(S("1^2"), 1), std::invalid_argument);
}

TEST(BuildBlock, Examples) {
  const BlockX x = BuildBlock(10, 9);
  EXPECT_EQ(x.block, S("10^9,-9^10"));
  EXPECT_EQ(x.Length(), 19);

  const BlockX y = BuildBlock(2, 2);
  EXPECT_EQ(y.g, 2);
  EXPECT_EQ(y.block, S("2^1,-2^1"));
  EXPECT_EQ(y.Length(), 2);

  const BlockX z = BuildBlock(3, 2);
  EXPECT_EQ(z.block, S("3^2,-2^3"));
  EXPECT_EQ(z.Length(), 5);
  EXPECT_EQ(z.block.Sum(), 0);

  EXPECT_THROW(BuildBlock(0, 1), std::invalid_argument);
  EXPECT_THROW(BuildBlock(4, 1, 3), std::invalid_argument);
}

TEST(AppendBlocks, Examples) {
  const BlockX x = BuildBlock(1, 1);
  EXPECT_EQ(AppendBlocks(BoundedSequence(1), x, 3), S("1^3,-1^3"));
  const BoundedSequence s = S("2^1,1^2,-1^4");
  EXPECT_EQ(AppendBlocks(s, BuildBlock(2, 1, 2), 0), s);
  EXPECT_EQ(DefaultBlockCount(10, 3), 30);
}

TEST(ReduceStep, ReplacesForeignSubsequenceByBlocks) {
  const BoundedSequence s = S("3^1,-1^3,1^4,-1^4");
  const BlockX x = BuildBlock(1, 1, 3);
  const auto step = ReduceStep(s, x);
  ASSERT_TRUE(step.has_value());
  EXPECT_EQ(step->removed, S("3^1,-1^3"));
  EXPECT_EQ(step->blocks_inserted, 2);
  EXPECT_EQ(step->next, S("1^6,-1^6", 3));
  EXPECT_EQ(step->next.Length(), s.Length());
  EXPECT_EQ(step->next.Sum(), 0);
}

TEST(ReduceStep, NoForeignElementsMeansNoStep) {
  EXPECT_FALSE(ReduceStep(S("1^5,-1^5"), BuildBlock(1, 1)).has_value());
  EXPECT_THROW(ReduceStep(S("1^2"), BuildBlock(1, 1)), std::invalid_argument);
}

TEST(ReduceStep, AgreesWithBruteForceOnSmallSequences) {
  std::mt19937_64 rng(11);
  int applied = 0, absent = 0;
  for (int c = 0; c < 1500; ++c) {
    std::uniform_int_distribution<int64_t> kd(1, 4);
    const int64_t k = kd(rng);
    std::uniform_int_distribution<int64_t> ld(0, 12), ed(1, k);
    const BoundedSequence s = oracle::RandomZeroSum(rng, k, ld(rng));
    const BlockX x = BuildBlock(ed(rng), ed(rng), k);
    const auto step = ReduceStep(s, x);
    const auto brute = oracle::ReducibleSubsequence(s, x.alpha, x.beta, x.Length());
    ASSERT_EQ(step.has_value(), brute.has_value()) << FormatSequence(s);
    if (!step) {
      ++absent;
      continue;
    }
    ++applied;
    const BoundedSequence& t = step->removed;
    EXPECT_TRUE(IsSubsequence(t, s));
    EXPECT_EQ(t.Sum(), 0);
    EXPECT_EQ(t.Length(), step->blocks_inserted * x.Length());
    EXPECT_GT(ForeignCount(t, x), 0);
    EXPECT_EQ(step->next, AppendBlocks(Remove(s, t), x, step->blocks_inserted));
  }
  EXPECT_GT(applied, 100);
  EXPECT_GT(absent, 100);
}

TEST(ReduceFixpoint, AlreadyReducedSequenceTakesNoSteps) {
  const BlockX x = BuildBlock(3, 2);
  const BoundedSequence s = S("3^4,-2^6");
  const ReductionTrace trace = ReduceFixpoint(s, x);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(trace.fixpoint, s);
  EXPECT_TRUE(trace.stripped.empty());
  EXPECT_EQ(trace.strip_count, 2);
}

TEST(ReduceFixpoint, TraceInvariants) {
  std::mt19937_64 rng(5);
  for (int c = 0; c < 200; ++c) {
    std::uniform_int_distribution<int64_t> kd(2, 4);
    const int64_t k = kd(rng);
    std::uniform_int_distribution<int64_t> ed(1, k), ld(0, 20), nd(0, 6);
    const BlockX x = BuildBlock(ed(rng), ed(rng), k);
    const BoundedSequence start =
        AppendBlocks(oracle::RandomZeroSum(rng, k, ld(rng)), x, nd(rng));
    const ReductionTrace trace = ReduceFixpoint(start, x);
    BoundedSequence cur = start;
    int64_t pair_count = cur.Multiplicity(x.alpha) + cur.Multiplicity(-x.beta);
    for (const auto& step : trace.steps) {
      cur = AppendBlocks(Remove(cur, step.removed), x, step.blocks_inserted);
      const int64_t next_count = cur.Multiplicity(x.alpha) + cur.Multiplicity(-x.beta);
      EXPECT_GT(next_count, pair_count);
      pair_count = next_count;
      EXPECT_EQ(cur.Length(), start.Length());
      EXPECT_EQ(cur.Sum(), 0);
    }
    EXPECT_EQ(cur, trace.fixpoint);
    EXPECT_LE(static_cast<int64_t>(trace.steps.size()), start.Length());
    EXPECT_FALSE(ReduceStep(trace.fixpoint, x).has_value());
    EXPECT_EQ(AppendBlocks(trace.stripped, x, trace.strip_count), trace.fixpoint);
  }
}

TEST(ForeignCount, Examples) {
  const BlockX x = BuildBlock(2, 3);
  EXPECT_EQ(ForeignCount(S("2^5,-3^7"), x), 0);
  EXPECT_EQ(ForeignCount(S("3^2,1^1,-1^4"), BuildBlock(1, 1, 3)), 2);
}

TEST(StripBlocks, Examples) {
  const BlockX x = BuildBlock(3, 2);
  const StripResult all = StripBlocks(AppendBlocks(BoundedSequence(3), x, 4), x);
  EXPECT_TRUE(all.stripped.empty());
  EXPECT_EQ(all.count, 4);

  const BlockX y = BuildBlock(10, 9);
  const StripResult left = StripBlocks(S("10^10,-9^10"), y);
  EXPECT_EQ(left.stripped, S("10^1", 10));
  EXPECT_EQ(left.count, 1);
}

TEST(CompleteBlock, Examples) {
  EXPECT_EQ(CompleteBlock(S("3^1"), BuildBlock(2, 1, 3)), S("3^1,-1^3"));
  EXPECT_EQ(CompleteBlock(S("1^1", 3), BuildBlock(3, 2, 3)), S("1^1,3^1,-2^2", 3));
  EXPECT_THROW(CompleteBlock(S("5^1"), BuildBlock(2, 4, 5)), std::invalid_argument);
}

TEST(CompleteBlock, NegativeSumPadsWithAlpha) {
  const BoundedSequence out = CompleteBlock(S("-3^2"), BuildBlock(2, 1, 3));
  EXPECT_EQ(out.Sum(), 0);
  EXPECT_EQ(out, S("-3^2,2^3"));
}

TEST(CompleteBlock, AlwaysZeroSumOnRandomInput) {
  std::mt19937_64 rng(3);
  for (int c = 0; c < 500; ++c) {
    std::uniform_int_distribution<int64_t> ed(1, 5), vd(-5, 5), ld(0, 8);
    const BlockX x = BuildBlock(ed(rng), ed(rng), 5);
    BoundedSequence::Terms terms;
    for (int64_t i = ld(rng); i > 0; --i) ++terms[vd(rng)];
    const BoundedSequence t(5, terms);
    if (t.Sum() % x.g != 0) {
      EXPECT_THROW(CompleteBlock(t, x), std::invalid_argument);
      continue;
    }
    const BoundedSequence out = CompleteBlock(t, x);
    EXPECT_EQ(out.Sum(), 0);
    EXPECT_TRUE(IsSubsequence(t, out));
    const BoundedSequence added = Remove(out, t);
    EXPECT_EQ(ForeignCount(added, x), 0);
    // a is least: one alpha fewer would break divisibility or sign.
    const int64_t a = added.Multiplicity(x.alpha);
    if (a > 0) {
      const int64_t smaller = t.Sum() + (a - 1) * x.alpha;
      EXPECT_TRUE(smaller < 0 || smaller % x.beta != 0);
    }
  }
}

}  // namespace
}  // namespace zerosum
