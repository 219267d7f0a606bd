#include "selftest/properties.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "selftest/oracle.h"
#include "zerosum/constants.h"
#include "zerosum/detect.h"
#include "zerosum/reduction.h"
#include "zerosum/sequence.h"

namespace zerosum::selftest {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { out_.name = std::move(name); }

  void Pass() { ++out_.cases; }
  void Fail(const std::string& why) {
    ++out_.cases;
    if (out_.failures++ == 0) out_.first_failure = why;
  }
  void Check(bool ok, const std::string& why) { ok ? Pass() : Fail(why); }
  PropertyOutcome Done() { return out_; }

 private:
  PropertyOutcome out_;
};

int64_t Uniform(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

// A random zero-sum sequence in which alpha and -beta are each frequent
// enough for the given n.
BoundedSequence FrequentPairInstance(std::mt19937_64& rng, int64_t k,
                                     int64_t alpha, int64_t beta, int64_t n) {
  const int64_t need = (k * n + k) / (k + 1);  // ceil(k n / (k+1))
  BoundedSequence::Terms terms;
  terms[alpha] += need + Uniform(rng, 0, 3);
  terms[-beta] += need + Uniform(rng, 0, 3);
  const int64_t foreign = Uniform(rng, 0, 2 * k);
  for (int64_t i = 0; i < foreign; ++i) {
    int64_t v;
    do {
      v = Uniform(rng, -k, k);
    } while (v == alpha || v == -beta);
    ++terms[v];
  }
  int64_t sum = 0;
  for (const auto& [v, m] : terms) sum += v * m;
  while (sum != 0) {
    if (sum > k) {
      ++terms[-beta];
      sum -= beta;
    } else if (sum < -k) {
      ++terms[alpha];
      sum += alpha;
    } else {
      ++terms[-sum];
      sum = 0;
    }
  }
  return BoundedSequence(k, std::move(terms));
}

}  // namespace

PropertyOutcome CheckSignRatios(const PropertyConfig& config) {
  Recorder rec("sign ratios on zero-sum sequences");
  std::mt19937_64 rng(config.seed ^ 0x51);
  for (int64_t c = 0; c < config.cases; ++c) {
    const int64_t k = Uniform(rng, 1, 6);
    const BoundedSequence s = oracle::RandomZeroSum(rng, k, Uniform(rng, 0, 60));
    const SignPartition p = SplitBySign(s);
    const int64_t len = s.Length();
    const bool ok = (k + 1) * p.positive.Length() <= k * len &&
                    (k + 1) * p.negative.Length() <= k * len &&
                    (k + 1) * (p.zeros + p.positive.Length()) >= len &&
                    (k + 1) * (p.zeros + p.negative.Length()) >= len &&
                    p.positive.Length() + p.negative.Length() + p.zeros == len;
    rec.Check(ok, "ratio bound violated for " + FormatSequence(s));
  }
  return rec.Done();
}

PropertyOutcome CheckSpectrumSymmetry(const PropertyConfig& config) {
  Recorder rec("spectrum complement symmetry");
  std::mt19937_64 rng(config.seed ^ 0x52);
  for (int64_t c = 0; c < config.cases; ++c) {
    const int64_t k = Uniform(rng, 1, 5);
    const BoundedSequence s = oracle::RandomZeroSum(rng, k, Uniform(rng, 0, 40));
    const Spectrum spec = ComputeSpectrum(s);
    bool ok = spec.Contains(0) && spec.Contains(s.Length());
    for (int64_t len : spec.lengths) ok &= spec.Contains(s.Length() - len);
    ok &= CheckComplementDuality(s, Uniform(rng, 0, s.Length()));
    rec.Check(ok, "asymmetric spectrum for " + FormatSequence(s));
  }
  return rec.Done();
}

PropertyOutcome CheckSpectrumAgainstOracle(int64_t k, int64_t max_elements) {
  Recorder rec("DP spectrum equals brute force (exhaustive)");
  const int64_t slots = 2 * k + 1;
  std::vector<int64_t> mult(static_cast<size_t>(slots), 0);
  int64_t total = 0;
  while (true) {
    BoundedSequence::Terms terms;
    for (int64_t i = 0; i < slots; ++i) {
      if (mult[static_cast<size_t>(i)] > 0) {
        terms.emplace(i - k, mult[static_cast<size_t>(i)]);
      }
    }
    const BoundedSequence s(k, std::move(terms));
    rec.Check(ComputeSpectrum(s).lengths == oracle::Spectrum(s),
              "spectrum mismatch for " + FormatSequence(s));
    // Odometer over vectors with total <= max_elements.
    size_t i = 0;
    while (i < mult.size()) {
      if (total < max_elements) {
        ++mult[i];
        ++total;
        break;
      }
      total -= mult[i];
      mult[i] = 0;
      ++i;
    }
    if (i == mult.size()) break;
  }
  return rec.Done();
}

PropertyOutcome CheckWitnessValidity(const PropertyConfig& config) {
  Recorder rec("witness validity");
  std::mt19937_64 rng(config.seed ^ 0x53);
  for (int64_t c = 0; c < config.cases; ++c) {
    const int64_t k = Uniform(rng, 1, 5);
    const int64_t len = Uniform(rng, 0, 30);
    // Mix zero-sum and arbitrary sequences.
    BoundedSequence s = oracle::RandomZeroSum(rng, k, len);
    if (c % 2 == 1 && !s.empty()) s = s.With(Uniform(rng, -k, k), 1);
    const int64_t t = Uniform(rng, 0, s.Length());
    const auto w = FindZeroSumOfLength(s, t);
    const bool contains = ComputeSpectrum(s).Contains(t);
    bool ok = w.has_value() == contains;
    if (w) {
      ok &= IsSubsequence(w->subsequence, s) && w->subsequence.Sum() == 0 &&
            w->subsequence.Length() == t && w->target_length == t;
    }
    rec.Check(ok, "bad witness for t=" + std::to_string(t) + " in " +
                      FormatSequence(s));
  }
  return rec.Done();
}

PropertyOutcome CheckDavenportBlocks(const PropertyConfig& config) {
  Recorder rec("davenport prefix-sum blocks");
  std::mt19937_64 rng(config.seed ^ 0x54);
  for (int64_t c = 0; c < config.davenport_cases; ++c) {
    const int64_t n = Uniform(rng, 1, 50);
    std::vector<int64_t> values(static_cast<size_t>(n + Uniform(rng, 0, 5)));
    for (auto& v : values) v = Uniform(rng, -1000, 1000);
    const DavenportBlock block = DavenportSubset(values, n);
    int64_t sum = 0;
    for (int64_t v : block.values) sum += v;
    const bool ok =
        block.begin < block.end && block.end <= static_cast<size_t>(n) &&
        std::equal(block.values.begin(), block.values.end(),
                   values.begin() + static_cast<std::ptrdiff_t>(block.begin),
                   values.begin() + static_cast<std::ptrdiff_t>(block.end)) &&
        sum % n == 0;
    rec.Check(ok, "invalid block for N=" + std::to_string(n));
  }
  return rec.Done();
}

PropertyOutcome CheckReduceFixpoints(const PropertyConfig& config) {
  Recorder rec("reduce fixpoint invariants");
  std::mt19937_64 rng(config.seed ^ 0x55);
  for (int64_t c = 0; c < config.cases; ++c) {
    const int64_t k = Uniform(rng, 1, 4);
    const BlockX x = BuildBlock(Uniform(rng, 1, k), Uniform(rng, 1, k), k);
    const BoundedSequence base = oracle::RandomZeroSum(rng, k, Uniform(rng, 0, 12));
    const BoundedSequence s = AppendBlocks(base, x, Uniform(rng, 0, 2));
    const ReductionTrace trace = ReduceFixpoint(s, x);

    std::ostringstream why;
    why << "alpha=" << x.alpha << " beta=" << x.beta << " s=" << FormatSequence(s);
    bool ok = static_cast<int64_t>(trace.steps.size()) <= s.Length();
    BoundedSequence cur = s;
    auto tally = [&](const BoundedSequence& q) {
      return q.Multiplicity(x.alpha) + q.Multiplicity(-x.beta);
    };
    for (const ReductionStep& step : trace.steps) {
      ok &= IsSubsequence(step.removed, cur) && step.removed.Sum() == 0 &&
            step.removed.Length() == step.blocks_inserted * x.Length() &&
            ForeignCount(step.removed, x) > 0;
      if (!ok) break;
      const BoundedSequence next =
          AppendBlocks(Remove(cur, step.removed), x, step.blocks_inserted);
      ok &= next.Length() == s.Length() && next.Sum() == 0 &&
            tally(next) > tally(cur);
      cur = next;
    }
    ok &= cur == trace.fixpoint;
    if (ok && trace.fixpoint.Length() <= 14) {
      ok &= !oracle::ReducibleSubsequence(trace.fixpoint, x.alpha, x.beta,
                                          x.Length());
    }
    const BoundedSequence& r = trace.stripped;
    ok &= r.Multiplicity(x.alpha) < x.beta / x.g ||
          r.Multiplicity(-x.beta) < x.alpha / x.g;
    ok &= AppendBlocks(r, x, trace.strip_count) == trace.fixpoint.WithBound(
                                                        r.bound());
    rec.Check(ok, why.str());
  }
  return rec.Done();
}

PropertyOutcome CheckFixpointForeignCount(const PropertyConfig& config) {
  Recorder rec("fixpoint foreign count below alpha+beta");
  std::mt19937_64 rng(config.seed ^ 0x56);
  for (int64_t c = 0; c < config.foreign_cases; ++c) {
    const int64_t k = Uniform(rng, 2, 4);
    const int64_t n = Uniform(rng, 1, 6);
    const BoundedSequence s = FrequentPairInstance(
        rng, k, Uniform(rng, 1, k), Uniform(rng, 1, k), n);
    const auto pair = FrequentElements(s, n);
    if (!pair) {
      rec.Fail("no frequent pair in " + FormatSequence(s));
      continue;
    }
    const BlockX x = BuildBlock(pair->alpha, pair->beta, k);
    const BoundedSequence extended =
        AppendBlocks(s, x, DefaultBlockCount(n, k));
    const ReductionTrace trace = ReduceFixpoint(extended, x);
    rec.Check(ForeignCount(trace.fixpoint, x) < x.alpha + x.beta,
              "alpha=" + std::to_string(x.alpha) + " beta=" +
                  std::to_string(x.beta) + " fixpoint " +
                  FormatSequence(trace.fixpoint));
  }
  return rec.Done();
}

PropertyOutcome CheckBlockAppendAvoidance(const PropertyConfig& config) {
  Recorder rec("block append keeps n-avoidance");
  std::mt19937_64 rng(config.seed ^ 0x57);
  int64_t attempts = 0;
  while (rec.Done().cases < config.cases / 10 && attempts < config.cases * 20) {
    ++attempts;
    const int64_t k = Uniform(rng, 2, 4);
    const BlockX planted = BuildBlock(Uniform(rng, 1, k), Uniform(rng, 1, k), k);
    const BoundedSequence s =
        Concat(AppendBlocks(BoundedSequence(k), planted, Uniform(rng, 1, 4)),
               oracle::RandomZeroSum(rng, k, Uniform(rng, 0, 6)));
    const Spectrum spec = ComputeSpectrum(s);
    std::vector<int64_t> candidates;
    for (int64_t n = 1; n < s.Length(); ++n) {
      if (!spec.Contains(n) && FrequentElements(s, n)) candidates.push_back(n);
    }
    if (candidates.empty()) continue;
    const int64_t n = candidates[static_cast<size_t>(
        Uniform(rng, 0, static_cast<int64_t>(candidates.size()) - 1))];
    const auto pair = FrequentElements(s, n);
    const BlockX x = BuildBlock(pair->alpha, pair->beta, k);
    bool ok = true;
    for (int64_t copies = 0; copies <= 10 && ok; ++copies) {
      ok = IsTAvoiding(AppendBlocks(s, x, copies), n);
    }
    rec.Check(ok, "n=" + std::to_string(n) + " s=" + FormatSequence(s));
  }
  return rec.Done();
}

std::vector<PropertyOutcome> RunAll(const PropertyConfig& config) {
  return {
      CheckSignRatios(config),
      CheckSpectrumSymmetry(config),
      CheckSpectrumAgainstOracle(3, 12),
      CheckWitnessValidity(config),
      CheckDavenportBlocks(config),
      CheckReduceFixpoints(config),
      CheckFixpointForeignCount(config),
      CheckBlockAppendAvoidance(config),
  };
}

}  // namespace zerosum::selftest
