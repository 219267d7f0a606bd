#include "zerosum/constants.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zerosum/detect.h"
#include "zerosum/sequence.h"

namespace zerosum {
namespace {

void RequirePositive(int64_t v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

void RequireLcmK(int64_t k) {
  RequirePositive(k, "k");
  if (k > kMaxLcmK) {
    throw std::invalid_argument("k above supported maximum " +
                                std::to_string(kMaxLcmK));
  }
}

std::vector<int64_t> PrimesUpTo(int64_t limit) {
  std::vector<int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (int64_t p = 2; p <= limit; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    primes.push_back(p);
    for (int64_t m = p * p; m <= limit; m += p) {
      composite[static_cast<size_t>(m)] = true;
    }
  }
  return primes;
}

int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow");
  }
  return out;
}

}  // namespace

std::string ConstantValue::ToString() const {
  return is_finite() ? std::to_string(*value_) : "infinite";
}

BigInt LcmRange(int64_t lo, int64_t hi) {
  RequirePositive(lo, "lo");
  if (lo > hi) throw std::invalid_argument("lcm range needs lo <= hi");
  if (hi > 2 * kMaxLcmK) throw std::invalid_argument("lcm range too large");
  // Short ranges: fold lcm directly. Long ranges starting near 1 are the
  // product of maximal prime powers, which avoids big gcds.
  if (lo > 2 || hi - lo < 64) {
    BigInt acc = 1;
    for (int64_t v = lo; v <= hi; ++v) {
      acc = boost::multiprecision::lcm(acc, BigInt(v));
    }
    return acc;
  }
  BigInt acc = 1;
  for (int64_t p : PrimesUpTo(hi)) {
    int64_t q = p;
    while (q <= hi / p) q *= p;
    acc *= q;
  }
  return acc;
}

std::vector<int64_t> PrimePowersUpTo(int64_t limit) {
  std::vector<int64_t> out;
  for (int64_t p : PrimesUpTo(limit)) {
    for (int64_t q = p;; q *= p) {
      out.push_back(q);
      if (q > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t DivisibilityLimit(int64_t k) {
  RequirePositive(k, "k");
  return std::max<int64_t>(2, 2 * k - 1);
}

DivisibilityReport DivisibilityCondition(int64_t k, int64_t t) {
  RequireLcmK(k);
  RequirePositive(t, "t");
  DivisibilityReport report;
  report.k = k;
  report.t = t;
  const int64_t limit = DivisibilityLimit(k);
  report.modulus = LcmRange(2, limit);
  // The lcm divides t iff every prime power up to the limit does.
  for (int64_t q : PrimePowersUpTo(limit)) {
    if (t % q != 0) {
      report.failing_prime_power = q;
      break;
    }
  }
  report.holds = !report.failing_prime_power.has_value();
  return report;
}

ConstantValue SPrimeT(int64_t k, int64_t t) {
  if (!DivisibilityCondition(k, t).holds) return ConstantValue::Infinite();
  // The condition forces t >= lcm(2..2k-1), so k is tiny and k^2 is safe.
  return ConstantValue::Finite(CheckedAdd(t, k * k - k));
}

ConstantBounds BoundsForConstant(int64_t k, int64_t t) {
  const DivisibilityReport report = DivisibilityCondition(k, t);
  if (!report.holds) {
    throw std::invalid_argument(
        "divisibility condition fails for k=" + std::to_string(k) +
        ", t=" + std::to_string(t) + " (" +
        std::to_string(*report.failing_prime_power) + " does not divide t)");
  }
  return ConstantBounds{CheckedAdd(t, k * k - k),
                         CheckedAdd(t, 4 * k * k - 10 * k + 6)};
}

DavenportBlock DavenportSubset(const std::vector<int64_t>& values,
                               int64_t modulus) {
  RequirePositive(modulus, "modulus");
  if (static_cast<int64_t>(values.size()) < modulus) {
    throw std::invalid_argument("davenport: need at least N = " +
                                std::to_string(modulus) + " values, got " +
                                std::to_string(values.size()));
  }
  // seen[r] = index i such that the prefix sum of values[0, i) is r mod N.
  std::vector<int64_t> seen(static_cast<size_t>(modulus), -1);
  seen[0] = 0;
  int64_t residue = 0;
  for (int64_t i = 0; i < modulus; ++i) {
    const int64_t v = values[static_cast<size_t>(i)] % modulus;
    residue = ((residue + v) % modulus + modulus) % modulus;
    const int64_t prev = seen[static_cast<size_t>(residue)];
    if (prev >= 0) {
      DavenportBlock block;
      block.begin = static_cast<size_t>(prev);
      block.end = static_cast<size_t>(i + 1);
      block.values.assign(values.begin() + prev, values.begin() + i + 1);
      return block;
    }
    seen[static_cast<size_t>(residue)] = i + 1;
  }
  // N + 1 prefix sums in N residue classes always collide.
  throw std::logic_error("davenport: pigeonhole failed");
}

int64_t FrobeniusNumber(int64_t a, int64_t b) {
  if (a < 2 || b < 2) {
    throw std::invalid_argument("frobenius: a and b must be >= 2");
  }
  if (std::gcd(a, b) != 1) {
    throw std::invalid_argument("frobenius: a and b must be coprime");
  }
  int64_t ab;
  if (__builtin_mul_overflow(a, b, &ab)) {
    throw std::overflow_error("frobenius: a*b overflows");
  }
  return ab - a - b;
}

bool LcmGrowthCheck(int64_t k) {
  RequireLcmK(k);
  if (k < 2) throw std::invalid_argument("lcm growth check needs k >= 2");
  const BigInt kk = k;
  return LcmRange(2, 2 * k - 1) >= 4 * kk * kk * kk * kk;
}

FrequencyMargins FrequencyMarginCheck(int64_t t, int64_t n) {
  auto branch = [](int64_t num, int64_t den, int64_t rnum, int64_t rden) {
    MarginBranch b;
    const int64_t g1 = std::gcd(num, den);
    const int64_t g2 = std::gcd(rnum, rden);
    b.lhs_num = num / g1;
    b.lhs_den = den / g1;
    b.rhs_num = rnum / g2;
    b.rhs_den = rden / g2;
    // Cross-multiplied in 128 bits; denominators are positive.
    b.holds = static_cast<__int128>(num) * rden >=
              static_cast<__int128>(rnum) * den;
    return b;
  };
  int64_t four_n;
  if (__builtin_mul_overflow(n, int64_t{4}, &four_n)) {
    throw std::overflow_error("frequency margins: n too large");
  }
  FrequencyMargins m;
  m.t = t;
  m.n = n;
  m.spread = branch(t, 18, four_n, 5);
  m.concentrated = branch(t, 10, four_n, 5);
  return m;
}

int64_t MinimalZeroSumMaxLength(int64_t k) {
  RequirePositive(k, "k");
  if (k > 4) {
    throw std::invalid_argument(
        "minimal zero-sum search is exhaustive and limited to k <= 4");
  }
  // Ordering a minimal zero-sum sequence so partial sums stay in
  // [-k+1, k] shows its length is at most 2k; search one past that.
  const int64_t ceiling = 2 * k + 1;
  const int64_t slots = 2 * k + 1;
  std::vector<int64_t> mult(static_cast<size_t>(slots), 0);
  int64_t best = 0;

  // Odometer over multiplicity vectors with total length <= ceiling.
  auto total = [&] { return std::accumulate(mult.begin(), mult.end(), int64_t{0}); };
  while (true) {
    size_t i = 0;
    while (i < mult.size()) {
      ++mult[i];
      if (total() <= ceiling) break;
      mult[i] = 0;
      ++i;
    }
    if (i == mult.size()) break;

    BoundedSequence::Terms terms;
    for (int64_t s = 0; s < slots; ++s) {
      if (mult[static_cast<size_t>(s)] > 0) {
        terms.emplace(s - k, mult[static_cast<size_t>(s)]);
      }
    }
    const BoundedSequence seq(k, std::move(terms));
    if (seq.Sum() != 0 || seq.Length() <= best) continue;
    const Spectrum spec = ComputeSpectrum(seq);
    // Minimal: the only zero-sum subsequences are empty and the whole.
    if (spec.lengths.size() == 2) best = seq.Length();
  }
  return best;
}

}  // namespace zerosum
