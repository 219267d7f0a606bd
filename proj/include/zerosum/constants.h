// The modified EGZ constant s'_t([-k,k]) and the numeric facts around it.

#ifndef ZEROSUM_CONSTANTS_H_
#define ZEROSUM_CONSTANTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zerosum {

using BigInt = boost::multiprecision::cpp_int;

// Largest k accepted by the lcm-based routines. lcm(2..2k-1) has roughly
// 2.9 k bits, so this keeps every call well under a second.
inline constexpr int64_t kMaxLcmK = 100000;

// s'_t([-k,k]): a finite length or infinity.
class ConstantValue {
 public:
  static ConstantValue Infinite() { return ConstantValue(); }
  static ConstantValue Finite(int64_t value) { return ConstantValue(value); }

  bool is_finite() const { return value_.has_value(); }
  // Throws std::bad_optional_access when infinite.
  int64_t value() const { return value_.value(); }
  std::string ToString() const;

  friend bool operator==(const ConstantValue&, const ConstantValue&) = default;

 private:
  ConstantValue() = default;
  explicit ConstantValue(int64_t v) : value_(v) {}
  std::optional<int64_t> value_;
};

struct DivisibilityReport {
  int64_t k = 0;
  int64_t t = 0;
  BigInt modulus;  // lcm(2, ..., max(2, 2k-1))
  bool holds = false;
  // Smallest prime power q <= max(2, 2k-1) with q not dividing t.
  std::optional<int64_t> failing_prime_power;
};

struct ConstantBounds {
  int64_t lower = 0;  // t + k^2 - k
  int64_t upper = 0;  // t + 4k^2 - 10k + 6
};

// A consecutive block values[begin, end) whose sum is 0 mod N.
struct DavenportBlock {
  size_t begin = 0;
  size_t end = 0;
  std::vector<int64_t> values;
};

// One branch of the k = 4 frequency estimate: lhs >= rhs as exact rationals.
struct MarginBranch {
  int64_t lhs_num = 0, lhs_den = 1;
  int64_t rhs_num = 0, rhs_den = 1;
  bool holds = false;
};

struct FrequencyMargins {
  int64_t t = 0;
  int64_t n = 0;
  MarginBranch spread;        // t/18 >= (4/5) n
  MarginBranch concentrated;  // t/10 >= (4/5) n
  bool holds() const { return spread.holds && concentrated.holds; }
};

// lcm(lo, lo+1, ..., hi). Throws std::invalid_argument unless
// 1 <= lo <= hi <= 2 * kMaxLcmK.
BigInt LcmRange(int64_t lo, int64_t hi);

// Every prime power q with 2 <= q <= limit, ascending.
std::vector<int64_t> PrimePowersUpTo(int64_t limit);

// max(2, 2k - 1).
int64_t DivisibilityLimit(int64_t k);

DivisibilityReport DivisibilityCondition(int64_t k, int64_t t);

// t + k^2 - k when the divisibility condition holds, infinity otherwise.
ConstantValue SPrimeT(int64_t k, int64_t t);

// Throws std::invalid_argument when the divisibility condition fails.
ConstantBounds BoundsForConstant(int64_t k, int64_t t);

// Prefix-sum pigeonhole over the first N entries. Throws
// std::invalid_argument if fewer than N values are given or N < 1.
DavenportBlock DavenportSubset(const std::vector<int64_t>& values,
                               int64_t modulus);

// ab - a - b. Requires a, b >= 2 and gcd(a, b) = 1.
int64_t FrobeniusNumber(int64_t a, int64_t b);

// lcm(2, ..., 2k-1) >= 4 k^4, exactly. Requires k >= 2.
bool LcmGrowthCheck(int64_t k);

FrequencyMargins FrequencyMarginCheck(int64_t t = 420, int64_t n = 29);

// Longest minimal zero-sum sequence over [-k, k], found exhaustively.
// Requires 1 <= k <= 4.
int64_t MinimalZeroSumMaxLength(int64_t k);

}  // namespace zerosum

#endif  // ZEROSUM_CONSTANTS_H_
