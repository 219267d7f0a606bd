#include "selftest/oracle.h"

#include <algorithm>

namespace zerosum::oracle {

void ForEachSubsequence(
    const BoundedSequence& s,
    const std::function<void(const std::vector<int64_t>&,
                             const std::vector<int64_t>&)>& visit) {
  std::vector<int64_t> values, limits;
  for (const auto& [value, mult] : s.terms()) {
    values.push_back(value);
    limits.push_back(mult);
  }
  std::vector<int64_t> counts(values.size(), 0);
  while (true) {
    visit(values, counts);
    size_t i = 0;
    while (i < counts.size() && counts[i] == limits[i]) counts[i++] = 0;
    if (i == counts.size()) return;
    ++counts[i];
  }
}

std::set<std::pair<int64_t, int64_t>> LengthSums(const BoundedSequence& s) {
  std::set<std::pair<int64_t, int64_t>> out;
  ForEachSubsequence(s, [&](const auto& values, const auto& counts) {
    int64_t len = 0, sum = 0;
    for (size_t i = 0; i < values.size(); ++i) {
      len += counts[i];
      sum += counts[i] * values[i];
    }
    out.emplace(len, sum);
  });
  return out;
}

std::vector<int64_t> Spectrum(const BoundedSequence& s) {
  std::set<int64_t> lengths;
  for (const auto& [len, sum] : LengthSums(s)) {
    if (sum == 0) lengths.insert(len);
  }
  return {lengths.begin(), lengths.end()};
}

bool Contains(const BoundedSequence& s, int64_t t) {
  const auto spec = Spectrum(s);
  return std::binary_search(spec.begin(), spec.end(), t);
}

std::optional<BoundedSequence> ReducibleSubsequence(const BoundedSequence& s,
                                                    int64_t alpha,
                                                    int64_t beta,
                                                    int64_t block_length) {
  std::optional<BoundedSequence> found;
  ForEachSubsequence(s, [&](const auto& values, const auto& counts) {
    if (found) return;
    int64_t len = 0, sum = 0;
    bool foreign = false;
    for (size_t i = 0; i < values.size(); ++i) {
      len += counts[i];
      sum += counts[i] * values[i];
      if (counts[i] > 0 && values[i] != alpha && values[i] != -beta) {
        foreign = true;
      }
    }
    if (foreign && sum == 0 && len > 0 && len % block_length == 0) {
      BoundedSequence::Terms terms;
      for (size_t i = 0; i < values.size(); ++i) {
        if (counts[i] > 0) terms.emplace(values[i], counts[i]);
      }
      found = BoundedSequence(s.bound(), std::move(terms));
    }
  });
  return found;
}

int64_t FrobeniusBySieve(int64_t a, int64_t b) {
  const int64_t limit = a * b;
  std::vector<bool> reachable(static_cast<size_t>(limit) + 1, false);
  reachable[0] = true;
  for (int64_t v = 1; v <= limit; ++v) {
    reachable[static_cast<size_t>(v)] =
        (v >= a && reachable[static_cast<size_t>(v - a)]) ||
        (v >= b && reachable[static_cast<size_t>(v - b)]);
  }
  int64_t largest = -1;
  for (int64_t v = 0; v <= limit; ++v) {
    if (!reachable[static_cast<size_t>(v)]) largest = v;
  }
  return largest;
}

BoundedSequence RandomZeroSum(std::mt19937_64& rng, int64_t k,
                              int64_t length) {
  std::uniform_int_distribution<int64_t> value_dist(-k, k);
  std::vector<int64_t> elems(static_cast<size_t>(length));
  int64_t sum = 0;
  for (auto& e : elems) {
    e = value_dist(rng);
    sum += e;
  }
  // Move a random element toward -sign(sum) until the sum is zero. Some
  // element always has room: if sum > 0 not every element can be -k.
  std::uniform_int_distribution<size_t> index_dist(
      0, elems.empty() ? 0 : elems.size() - 1);
  while (sum != 0) {
    const size_t i = index_dist(rng);
    if (sum > 0 && elems[i] > -k) {
      const int64_t d = std::min(sum, elems[i] + k);
      elems[i] -= d;
      sum -= d;
    } else if (sum < 0 && elems[i] < k) {
      const int64_t d = std::min(-sum, k - elems[i]);
      elems[i] += d;
      sum += d;
    }
  }
  BoundedSequence::Terms terms;
  for (int64_t e : elems) ++terms[e];
  return BoundedSequence(k, std::move(terms));
}

}  // namespace zerosum::oracle
