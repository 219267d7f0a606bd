#include "zerosum/sequence.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>
#include <utility>

namespace zerosum {
namespace {

int64_t CheckedAdd(int64_t a, int64_t b, const char* what) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error(std::string(what) + ": length overflow");
  }
  return out;
}

int64_t AbsValue(int64_t v) {
  if (v == INT64_MIN) throw std::overflow_error("value out of range");
  return v < 0 ? -v : v;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  bool Consume(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int64_t Integer() {
    SkipSpace();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    // from_chars rejects a leading '+', accept it here.
    if (first != last && *first == '+') {
      ++first;
      ++pos_;
    }
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError("integer out of range at offset " +
                       std::to_string(pos_));
    }
    if (ec != std::errc()) {
      throw ParseError("expected integer at offset " + std::to_string(pos_));
    }
    pos_ += static_cast<size_t>(ptr - first);
    return value;
  }
  size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

BoundedSequence::BoundedSequence(int64_t bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
}

BoundedSequence::BoundedSequence(int64_t bound, Terms terms)
    : BoundedSequence(bound) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second < 0) {
      throw std::invalid_argument("negative multiplicity for value " +
                                  std::to_string(it->first));
    }
    if (it->second == 0) {
      it = terms.erase(it);
      continue;
    }
    if (AbsValue(it->first) > bound_) {
      throw std::invalid_argument("value " + std::to_string(it->first) +
                                  " exceeds bound " + std::to_string(bound_));
    }
    length_ = CheckedAdd(length_, it->second, "sequence");
    ++it;
  }
  int64_t scaled;
  if (__builtin_mul_overflow(bound_, length_, &scaled)) {
    throw std::overflow_error("bound * length overflows");
  }
  // |sum| <= bound * length, so this cannot overflow now.
  for (const auto& [value, mult] : terms) sum_ += value * mult;
  terms_ = std::move(terms);
}

BoundedSequence BoundedSequence::Repeat(int64_t value, int64_t count,
                                        std::optional<int64_t> bound) {
  const int64_t k = bound.value_or(std::max<int64_t>(1, AbsValue(value)));
  return BoundedSequence(k, Terms{{value, count}});
}

int64_t BoundedSequence::Multiplicity(int64_t value) const {
  auto it = terms_.find(value);
  return it == terms_.end() ? 0 : it->second;
}

BoundedSequence BoundedSequence::WithBound(int64_t bound) const {
  return BoundedSequence(bound, terms_);
}

BoundedSequence BoundedSequence::Negated() const {
  Terms negated;
  for (const auto& [value, mult] : terms_) negated.emplace(-value, mult);
  return BoundedSequence(bound_, std::move(negated));
}

BoundedSequence BoundedSequence::With(int64_t value, int64_t count) const {
  Terms terms = terms_;
  terms[value] = CheckedAdd(terms[value], count, "With");
  return BoundedSequence(std::max(bound_, std::max<int64_t>(1, AbsValue(value))),
                         std::move(terms));
}

bool CanonicalLess(const BoundedSequence& a, const BoundedSequence& b) {
  if (a.Length() != b.Length()) return a.Length() < b.Length();
  return a.terms() < b.terms();
}

BoundedSequence ParseSequence(std::string_view text,
                              std::optional<int64_t> bound) {
  if (bound && *bound < 1) throw ParseError("bound must be positive");
  BoundedSequence::Terms terms;
  int64_t max_abs = 1;
  Cursor cur(text);
  if (!cur.AtEnd()) {
    do {
      const int64_t value = cur.Integer();
      int64_t mult = 1;
      if (cur.Consume('^')) {
        mult = cur.Integer();
        if (mult <= 0) {
          throw ParseError("multiplicity must be positive for value " +
                           std::to_string(value));
        }
      }
      if (value == INT64_MIN) throw ParseError("value out of range");
      const int64_t a = AbsValue(value);
      if (bound && a > *bound) {
        throw ParseError("value " + std::to_string(value) + " exceeds bound " +
                         std::to_string(*bound));
      }
      max_abs = std::max(max_abs, a);
      int64_t& slot = terms[value];
      if (__builtin_add_overflow(slot, mult, &slot)) {
        throw ParseError("multiplicity overflow for value " +
                         std::to_string(value));
      }
    } while (cur.Consume(','));
    if (!cur.AtEnd()) {
      throw ParseError("unexpected character at offset " +
                       std::to_string(cur.pos()));
    }
  }
  try {
    return BoundedSequence(bound.value_or(max_abs), std::move(terms));
  } catch (const std::overflow_error& e) {
    throw ParseError(e.what());
  }
}

std::string FormatSequence(const BoundedSequence& s) {
  std::string out;
  for (const auto& [value, mult] : s.terms()) {
    if (!out.empty()) out += ',';
    out += std::to_string(value);
    out += '^';
    out += std::to_string(mult);
  }
  return out;
}

int64_t Sigma(const BoundedSequence& s) { return s.Sum(); }

BoundedSequence Concat(const BoundedSequence& s, const BoundedSequence& t) {
  BoundedSequence::Terms terms = s.terms();
  for (const auto& [value, mult] : t.terms()) {
    terms[value] = CheckedAdd(terms[value], mult, "concat");
  }
  return BoundedSequence(std::max(s.bound(), t.bound()), std::move(terms));
}

BoundedSequence Remove(const BoundedSequence& s, const BoundedSequence& t) {
  if (!IsSubsequence(t, s)) {
    throw std::invalid_argument("remove: [" + FormatSequence(t) +
                                "] is not a subsequence of [" +
                                FormatSequence(s) + "]");
  }
  BoundedSequence::Terms terms = s.terms();
  for (const auto& [value, mult] : t.terms()) terms[value] -= mult;
  return BoundedSequence(s.bound(), std::move(terms));
}

bool IsSubsequence(const BoundedSequence& t, const BoundedSequence& s) {
  for (const auto& [value, mult] : t.terms()) {
    if (mult > s.Multiplicity(value)) return false;
  }
  return true;
}

SignPartition SplitBySign(const BoundedSequence& s) {
  BoundedSequence::Terms pos, neg;
  int64_t zeros = 0;
  for (const auto& [value, mult] : s.terms()) {
    if (value > 0) {
      pos.emplace(value, mult);
    } else if (value < 0) {
      neg.emplace(value, mult);
    } else {
      zeros = mult;
    }
  }
  return SignPartition{BoundedSequence(s.bound(), std::move(pos)),
                       BoundedSequence(s.bound(), std::move(neg)), zeros};
}

BoundedSequence Complement(const BoundedSequence& t, const BoundedSequence& s) {
  return Remove(s, t);
}

}  // namespace zerosum
