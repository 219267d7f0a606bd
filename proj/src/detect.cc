#include "zerosum/detect.h"

#include <algorithm>
#include <string>

namespace zerosum {
namespace {

constexpr int kWordBits = 64;

void CheckMemory(size_t bytes, const DetectOptions& options) {
  if (bytes > options.memory_limit_bytes) {
    throw ResourceLimitError(
        "length-sum table needs ~" + std::to_string(bytes >> 20) +
        " MiB, over the " + std::to_string(options.memory_limit_bytes >> 20) +
        " MiB limit");
  }
}

}  // namespace

ReachGrid::ReachGrid(int64_t bound, int64_t max_count)
    : bound_(bound), max_count_(max_count), offset_(bound * max_count) {
  const int64_t width = 2 * offset_ + 1;
  words_ = static_cast<size_t>((width + kWordBits - 1) / kWordBits);
  const int tail = static_cast<int>(width % kWordBits);
  last_mask_ = tail == 0 ? ~uint64_t{0} : (uint64_t{1} << tail) - 1;
  bits_.assign(words_ * static_cast<size_t>(max_count_ + 1), 0);
  bits_[static_cast<size_t>(offset_ / kWordBits)] |= uint64_t{1}
                                                     << (offset_ % kWordBits);
}

size_t ReachGrid::EstimateBytes(int64_t bound, int64_t max_count) {
  const long double width = 2.0L * bound * max_count + 1;
  const long double words = (width + kWordBits - 1) / kWordBits;
  const long double bytes = words * (max_count + 1) * sizeof(uint64_t);
  if (bytes > static_cast<long double>(SIZE_MAX / 2)) return SIZE_MAX / 2;
  return static_cast<size_t>(bytes);
}

bool ReachGrid::Test(int64_t count, int64_t sum) const {
  if (count < 0 || count > max_count_) return false;
  if (sum < -offset_ || sum > offset_) return false;
  const int64_t bit = sum + offset_;
  return (bits_[static_cast<size_t>(count) * words_ +
                static_cast<size_t>(bit / kWordBits)] >>
          (bit % kWordBits)) &
         1;
}

void ReachGrid::OrShiftedRow(int64_t dst_row, int64_t src_row, int64_t shift) {
  uint64_t* dst = bits_.data() + static_cast<size_t>(dst_row) * words_;
  const uint64_t* src = bits_.data() + static_cast<size_t>(src_row) * words_;
  const int64_t n = static_cast<int64_t>(words_);
  if (shift >= 0) {
    const int64_t ws = shift / kWordBits;
    const int bs = static_cast<int>(shift % kWordBits);
    for (int64_t i = n - 1; i >= ws; --i) {
      uint64_t w = src[i - ws] << bs;
      if (bs != 0 && i - ws - 1 >= 0) w |= src[i - ws - 1] >> (kWordBits - bs);
      dst[i] |= w;
    }
  } else {
    const int64_t ws = (-shift) / kWordBits;
    const int bs = static_cast<int>((-shift) % kWordBits);
    for (int64_t i = 0; i + ws < n; ++i) {
      uint64_t w = src[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < n) w |= src[i + ws + 1] << (kWordBits - bs);
      dst[i] |= w;
    }
  }
  dst[n - 1] &= last_mask_;
}

void ReachGrid::AddCopies(int64_t value, int64_t mult) {
  mult = std::min(mult, max_count_);
  // Binary decomposition: pieces 1, 2, 4, ... plus a remainder cover every
  // copy count in [0, mult] exactly.
  for (int64_t piece = 1; mult > 0; piece <<= 1) {
    const int64_t p = std::min(piece, mult);
    mult -= p;
    // Descending rows so each row reads the pre-piece state of row j - p.
    for (int64_t j = max_count_; j >= p; --j) {
      OrShiftedRow(j, j - p, p * value);
    }
  }
}

LengthSumTable LengthSumTable::Build(const BoundedSequence& source,
                                     int64_t max_length,
                                     const DetectOptions& options) {
  if (max_length < 0 || max_length > source.Length()) {
    throw std::invalid_argument("max_length must lie in [0, |s|]");
  }
  LengthSumTable table;
  table.source_ = source;
  table.max_length_ = max_length;
  const size_t layers = static_cast<size_t>(source.DistinctValues()) + 1;
  const size_t per_layer = ReachGrid::EstimateBytes(source.bound(), max_length);
  CheckMemory(per_layer > SIZE_MAX / 2 / layers ? SIZE_MAX / 2
                                                : per_layer * layers,
              options);
  table.layers_.reserve(layers);
  table.layers_.emplace_back(source.bound(), max_length);
  for (const auto& [value, mult] : source.terms()) {
    table.values_.push_back(value);
    table.mults_.push_back(mult);
    ReachGrid next = table.layers_.back();
    next.AddCopies(value, mult);
    table.layers_.push_back(std::move(next));
  }
  return table;
}

bool LengthSumTable::Reachable(int64_t count, int64_t sum) const {
  return layers_.back().Test(count, sum);
}

std::vector<std::pair<int64_t, int64_t>> LengthSumTable::ReachablePairs()
    const {
  std::vector<std::pair<int64_t, int64_t>> out;
  const int64_t k = source_.bound();
  for (int64_t j = 0; j <= max_length_; ++j) {
    for (int64_t sum = -k * j; sum <= k * j; ++sum) {
      if (Reachable(j, sum)) out.emplace_back(j, sum);
    }
  }
  return out;
}

std::optional<BoundedSequence> LengthSumTable::Extract(int64_t count,
                                                       int64_t sum) const {
  if (!Reachable(count, sum)) return std::nullopt;
  BoundedSequence::Terms picked;
  for (size_t i = values_.size(); i-- > 0;) {
    const ReachGrid& prev = layers_[i];
    const int64_t value = values_[i];
    const int64_t limit = std::min(mults_[i], count);
    int64_t copies = 0;
    while (copies <= limit && !prev.Test(count - copies, sum - copies * value)) {
      ++copies;
    }
    // Layer i+1 reachability guarantees some copy count works.
    if (copies > limit) {
      throw std::logic_error("length-sum table backtrack failed");
    }
    if (copies > 0) picked.emplace(value, copies);
    count -= copies;
    sum -= copies * value;
  }
  return BoundedSequence(source_.bound(), std::move(picked));
}

bool Spectrum::Contains(int64_t length) const {
  return std::binary_search(lengths.begin(), lengths.end(), length);
}

LengthSumTable BuildTable(const BoundedSequence& s, int64_t max_length,
                          const DetectOptions& options) {
  return LengthSumTable::Build(s, max_length, options);
}

std::optional<Witness> FindZeroSumOfLength(const BoundedSequence& s, int64_t t,
                                           const DetectOptions& options) {
  if (t < 0 || t > s.Length()) return std::nullopt;
  // For zero-sum s the complement of a zero-sum T is zero-sum, so search
  // whichever of t and |s| - t is shorter.
  const bool via_complement = s.Sum() == 0 && s.Length() - t < t;
  const int64_t target = via_complement ? s.Length() - t : t;
  const LengthSumTable table = BuildTable(s, target, options);
  std::optional<BoundedSequence> found = table.Extract(target, 0);
  if (!found) return std::nullopt;
  if (via_complement) found = Remove(s, *found);
  return Witness{std::move(*found), t};
}

bool IsTAvoiding(const BoundedSequence& s, int64_t t,
                 const DetectOptions& options) {
  if (t < 0 || t > s.Length()) return true;
  const int64_t target =
      s.Sum() == 0 ? std::min(t, s.Length() - t) : t;
  CheckMemory(ReachGrid::EstimateBytes(s.bound(), target), options);
  ReachGrid grid(s.bound(), target);
  for (const auto& [value, mult] : s.terms()) grid.AddCopies(value, mult);
  return !grid.Test(target, 0);
}

Spectrum ComputeSpectrum(const BoundedSequence& s,
                         const DetectOptions& options) {
  const int64_t cap = s.Length();
  CheckMemory(ReachGrid::EstimateBytes(s.bound(), cap), options);
  ReachGrid grid(s.bound(), cap);
  for (const auto& [value, mult] : s.terms()) grid.AddCopies(value, mult);
  Spectrum out;
  for (int64_t j = 0; j <= cap; ++j) {
    if (grid.Test(j, 0)) out.lengths.push_back(j);
  }
  return out;
}

bool CheckComplementDuality(const BoundedSequence& s, int64_t t,
                            const DetectOptions& options) {
  if (s.Sum() != 0) {
    throw std::invalid_argument("complement duality needs a zero-sum sequence");
  }
  if (t < 0 || t > s.Length()) {
    throw std::invalid_argument("t must lie in [0, |s|]");
  }
  // Evaluate both sides directly rather than through the complement
  // shortcut in IsTAvoiding, otherwise the check would be circular.
  auto avoids = [&](int64_t len) {
    CheckMemory(ReachGrid::EstimateBytes(s.bound(), len), options);
    ReachGrid grid(s.bound(), len);
    for (const auto& [value, mult] : s.terms()) grid.AddCopies(value, mult);
    return !grid.Test(len, 0);
  };
  return avoids(t) == avoids(s.Length() - t);
}

}  // namespace zerosum
