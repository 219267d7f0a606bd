#include "zerosum/search.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "zerosum/constants.h"

namespace zerosum {
namespace {

using Clock = std::chrono::steady_clock;

// State shared by the workers of one level scan.
struct SharedState {
  const SearchOptions* options = nullptr;
  int64_t level = 0;
  int64_t node_base = 0;  // nodes from earlier levels, for caps and progress
  std::atomic<int64_t> nodes{0};
  std::atomic<bool> cap_hit{false};
  Clock::time_point start;
  std::mutex progress_mu;
  int64_t next_progress = 0;
  std::optional<int64_t> best;
};

struct BranchResult {
  int64_t count = 0;
  std::vector<BoundedSequence> sequences;
  bool stopped_early = false;
};

class LevelScanner {
 public:
  LevelScanner(int64_t k, int64_t t, int64_t length, int64_t max_sequences,
               bool count_all, SharedState* shared)
      : k_(k),
        t_(t),
        length_(length),
        n_(length - t),
        max_sequences_(max_sequences),
        count_all_(count_all),
        shared_(shared) {
    for (int64_t v = k; v >= 1; --v) {
      order_.push_back(v);
      order_.push_back(-v);
    }
    const size_t depth = order_.size();
    max_pos_after_.assign(depth, 0);
    max_neg_after_.assign(depth, 0);
    for (size_t d = 0; d < depth; ++d) {
      for (size_t e = d + 1; e < depth; ++e) {
        if (order_[e] > 0) {
          max_pos_after_[d] = std::max(max_pos_after_[d], order_[e]);
        } else {
          max_neg_after_[d] = std::max(max_neg_after_[d], -order_[e]);
        }
      }
    }
    const int64_t cap = std::min(length_, std::max(t_, n_));
    base_ = ReachGrid(k_, std::max<int64_t>(cap, 0));
    grids_.assign(depth + 1, base_);
    mult_.assign(depth, 0);
  }

  // Explores every vector whose first slot (value k) holds `first` copies.
  BranchResult Run(int64_t first) {
    result_ = BranchResult{};
    local_nodes_ = 0;
    grids_[0] = base_;
    if (Enter(0, first, grids_[0])) Descend(1);
    Flush();
    return std::move(result_);
  }

 private:
  // Tries slot `depth` with `m` copies, grid already holding them. Returns
  // whether the node survives pruning.
  bool Enter(size_t depth, int64_t m, ReachGrid& grid) {
    const int64_t value = order_[depth];
    if (depth == 0) grid.AddCopies(value, m);
    mult_[depth] = m;
    assigned_[depth] = (depth ? assigned_[depth - 1] : 0) + m;
    sum_[depth] = (depth ? sum_[depth - 1] : 0) + m * value;
    pos_[depth] = (depth ? pos_[depth - 1] : 0) + (value > 0 ? m : 0);
    neg_[depth] = (depth ? neg_[depth - 1] : 0) + (value < 0 ? m : 0);
    return Feasible(depth, grid) == Verdict::kOk;
  }

  enum class Verdict { kOk, kSkip, kStop };

  // kStop: this and every larger count at this slot fail.
  Verdict Feasible(size_t depth, const ReachGrid& grid) const {
    const int64_t assigned = assigned_[depth];
    const int64_t sum = sum_[depth];
    const int64_t value = order_[depth];
    if (assigned > length_) return Verdict::kStop;
    if ((k_ + 1) * pos_[depth] > k_ * length_) return Verdict::kStop;
    if ((k_ + 1) * neg_[depth] > k_ * length_) return Verdict::kStop;
    if (Contains(grid)) return Verdict::kStop;
    const int64_t rest = length_ - assigned;
    if (sum - rest * max_neg_after_[depth] > 0) {
      return value > 0 ? Verdict::kStop : Verdict::kSkip;
    }
    if (sum + rest * max_pos_after_[depth] < 0) {
      return value < 0 ? Verdict::kStop : Verdict::kSkip;
    }
    return Verdict::kOk;
  }

  bool Contains(const ReachGrid& grid) const {
    if (grid.Test(t_, 0)) return true;
    return n_ >= 1 && grid.Test(n_, 0);
  }

  bool ShouldStop() {
    if (++local_nodes_ >= 1024) Flush();
    return shared_->cap_hit.load(std::memory_order_relaxed) ||
           result_.stopped_early;
  }

  void Flush() {
    const int64_t total =
        shared_->nodes.fetch_add(local_nodes_, std::memory_order_relaxed) +
        local_nodes_ + shared_->node_base;
    local_nodes_ = 0;
    const SearchOptions& opt = *shared_->options;
    if (opt.node_limit > 0 && total >= opt.node_limit) {
      shared_->cap_hit = true;
    }
    if (opt.time_limit_seconds > 0) {
      const double elapsed =
          std::chrono::duration<double>(Clock::now() - shared_->start).count();
      if (elapsed >= opt.time_limit_seconds) shared_->cap_hit = true;
    }
    if (opt.progress && opt.progress_interval > 0) {
      std::lock_guard<std::mutex> lock(shared_->progress_mu);
      if (total >= shared_->next_progress) {
        shared_->next_progress = total + opt.progress_interval;
        opt.progress(SearchProgress{shared_->level, total, shared_->best});
      }
    }
  }

  void Descend(size_t depth) {
    if (ShouldStop()) return;
    const size_t last = order_.size() - 1;  // slot of -1
    if (depth == last) {
      Leaf(depth);
      return;
    }
    const int64_t value = order_[depth];
    const int64_t rest = length_ - assigned_[depth - 1];
    ReachGrid& grid = grids_[depth];
    grid = grids_[depth - 1];
    for (int64_t m = 0; m <= rest; ++m) {
      if (m > 0) grid.AddCopies(value, 1);
      mult_[depth] = m;
      assigned_[depth] = assigned_[depth - 1] + m;
      sum_[depth] = sum_[depth - 1] + m * value;
      pos_[depth] = pos_[depth - 1] + (value > 0 ? m : 0);
      neg_[depth] = neg_[depth - 1] + (value < 0 ? m : 0);
      const Verdict v = Feasible(depth, grid);
      if (v == Verdict::kStop) break;
      if (v == Verdict::kSkip) continue;
      Descend(depth + 1);
      if (shared_->cap_hit.load(std::memory_order_relaxed) ||
          result_.stopped_early) {
        return;
      }
    }
  }

  // The -1 slot absorbs the remaining sum, zeros fill the remaining length.
  void Leaf(size_t depth) {
    const int64_t sum = sum_[depth - 1];
    const int64_t minus_ones = sum;
    const int64_t zeros = length_ - assigned_[depth - 1] - minus_ones;
    if (minus_ones < 0 || zeros < 0) return;
    if (n_ >= 1 && zeros >= n_) return;
    if ((k_ + 1) * (neg_[depth - 1] + minus_ones) > k_ * length_) return;
    if ((k_ + 1) * pos_[depth - 1] > k_ * length_) return;
    ReachGrid& grid = grids_[depth];
    grid = grids_[depth - 1];
    grid.AddCopies(-1, minus_ones);
    grid.AddCopies(0, zeros);
    if (Contains(grid)) return;

    ++result_.count;
    if (max_sequences_ < 0 ||
        static_cast<int64_t>(result_.sequences.size()) < max_sequences_) {
      BoundedSequence::Terms terms;
      for (size_t d = 0; d < depth; ++d) {
        if (mult_[d] > 0) terms.emplace(order_[d], mult_[d]);
      }
      if (minus_ones > 0) terms[-1] += minus_ones;
      if (zeros > 0) terms.emplace(0, zeros);
      result_.sequences.emplace_back(k_, std::move(terms));
    }
    if (!count_all_ && max_sequences_ >= 0 &&
        static_cast<int64_t>(result_.sequences.size()) >= max_sequences_) {
      result_.stopped_early = true;
    }
  }

  const int64_t k_, t_, length_, n_;
  const int64_t max_sequences_;
  const bool count_all_;
  SharedState* shared_;

  std::vector<int64_t> order_;
  std::vector<int64_t> max_pos_after_, max_neg_after_;
  ReachGrid base_;
  std::vector<ReachGrid> grids_;
  std::vector<int64_t> mult_;
  int64_t assigned_[64] = {};
  int64_t sum_[64] = {};
  int64_t pos_[64] = {};
  int64_t neg_[64] = {};
  int64_t local_nodes_ = 0;
  BranchResult result_;
};

LevelScan RunLevel(int64_t k, int64_t t, int64_t length,
                   const SearchOptions& options, int64_t max_sequences,
                   bool count_all, int64_t node_base, Clock::time_point start,
                   std::optional<int64_t> best) {
  if (k < 1 || k > 31) throw std::invalid_argument("k must lie in [1, 31]");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (length < 0) throw std::invalid_argument("length must be >= 0");
  LevelScan scan;
  scan.k = k;
  scan.t = t;
  scan.length = length;
  // A zero-sum sequence of length t is its own zero-sum subsequence.
  if (length == t) {
    scan.complete = true;
    return scan;
  }

  SharedState shared;
  shared.options = &options;
  shared.level = length;
  shared.node_base = node_base;
  shared.start = start;
  shared.best = best;

  // Top-level branches: copies of k. Results are merged in branch order,
  // so output does not depend on scheduling.
  const int64_t branches = length + 1;
  std::vector<BranchResult> results(static_cast<size_t>(branches));
  std::atomic<int64_t> next{0};
  auto worker = [&] {
    LevelScanner scanner(k, t, length, max_sequences, count_all, &shared);
    for (int64_t b; (b = next.fetch_add(1)) < branches;) {
      if (shared.cap_hit) break;
      results[static_cast<size_t>(b)] = scanner.Run(b);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  bool stopped_early = false;
  for (BranchResult& r : results) {
    scan.count += r.count;
    stopped_early |= r.stopped_early;
    for (BoundedSequence& s : r.sequences) {
      if (max_sequences >= 0 &&
          static_cast<int64_t>(scan.sequences.size()) >= max_sequences) {
        break;
      }
      scan.sequences.push_back(std::move(s));
    }
  }
  std::sort(scan.sequences.begin(), scan.sequences.end(), CanonicalLess);
  scan.nodes = shared.nodes.load();
  scan.complete = !shared.cap_hit && !stopped_early;
  return scan;
}

void RequireBudget(int64_t k, const SearchOptions& options) {
  if (k >= 3 && !options.allow_long_running) {
    throw std::invalid_argument(
        "k >= 3 searches are long-running; enable them explicitly");
  }
}

}  // namespace

LevelScan ScanAvoidingAtLength(int64_t k, int64_t t, int64_t length,
                               const SearchOptions& options,
                               int64_t max_sequences) {
  return RunLevel(k, t, length, options, max_sequences, /*count_all=*/true, 0,
                  Clock::now(), std::nullopt);
}

SearchResult LongestAvoiding(int64_t k, int64_t t, int64_t ceiling,
                             const SearchOptions& options) {
  if (ceiling < t) throw std::invalid_argument("ceiling must be >= t");
  RequireBudget(k, options);
  SearchResult result;
  result.k = k;
  result.t = t;
  result.ceiling = ceiling;
  const auto start = Clock::now();
  const int64_t w = std::max(options.max_witnesses, 1);

  for (int64_t level = ceiling; level > t; --level) {
    LevelScan scan = RunLevel(k, t, level, options, w, /*count_all=*/false,
                              result.nodes_explored, start, std::nullopt);
    result.nodes_explored += scan.nodes;
    if (!scan.sequences.empty()) {
      result.best_length = level;
      result.witnesses = std::move(scan.sequences);
      result.exhaustive = level < ceiling;
      return result;
    }
    if (!scan.complete) {
      // Cap hit before anything was found at this level; fall back to the
      // trivial witness 0^[t-1].
      result.cap_hit = true;
      result.best_length = t - 1;
      result.witnesses = {BoundedSequence::Repeat(0, t - 1, k)};
      return result;
    }
  }
  // Levels above t are empty; every zero-sum sequence shorter than t is
  // t-avoiding.
  LevelScan scan = RunLevel(k, t, t - 1, options, w, /*count_all=*/false,
                            result.nodes_explored, start, t - 1);
  result.nodes_explored += scan.nodes;
  result.best_length = t - 1;
  result.witnesses = std::move(scan.sequences);
  result.exhaustive = t - 1 < ceiling;
  return result;
}

bool HasExtremalSupport(const BoundedSequence& s, int64_t k) {
  auto within = [&](int64_t sign) {
    for (const auto& [value, mult] : s.terms()) {
      const int64_t v = sign * value;
      if (v != -1 && v != k - 1 && v != k) return false;
    }
    return true;
  };
  return within(1) || within(-1);
}

ExtremalReport EnumerateExtremal(int64_t k, int64_t t,
                                 const SearchOptions& options) {
  if (k >= 4) {
    throw std::invalid_argument("extremal enumeration is limited to k <= 3");
  }
  RequireBudget(k, options);
  const DivisibilityReport div = DivisibilityCondition(k, t);
  if (!div.holds) {
    throw std::invalid_argument("divisibility condition fails for k=" +
                                std::to_string(k) + ", t=" + std::to_string(t));
  }
  ExtremalReport report;
  report.k = k;
  report.t = t;
  report.length = t + k * k - k - 1;
  report.degenerate = k == 1;
  LevelScan scan = ScanAvoidingAtLength(k, t, report.length, options, -1);
  report.sequences = std::move(scan.sequences);
  report.complete = scan.complete;
  report.support_ok = std::all_of(
      report.sequences.begin(), report.sequences.end(),
      [&](const BoundedSequence& s) { return HasExtremalSupport(s, k); });
  return report;
}

FrobeniusCheck VerifyFrobeniusAvoidance(int64_t k, int64_t t,
                                        const BoundedSequence& s) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (const auto& [value, mult] : s.terms()) {
    if (value != -1 && value != k - 1 && value != k) {
      throw std::invalid_argument("support must lie in {-1, k-1, k}; found " +
                                  std::to_string(value));
    }
  }
  if (s.Sum() != 0) throw std::invalid_argument("sequence must be zero-sum");
  FrobeniusCheck check;
  check.dp_avoiding = IsTAvoiding(s, t);
  // A zero-sum T with i copies of k and j of k-1 needs exactly
  // k i + (k-1) j copies of -1, so |T| = (k+1) i + k j.
  const int64_t vk = s.Multiplicity(k);
  const int64_t vk1 = k == 1 ? s.Multiplicity(0) : s.Multiplicity(k - 1);
  const int64_t vm1 = s.Multiplicity(-1);
  bool contains = false;
  for (int64_t i = 0; i <= vk && !contains && (k + 1) * i <= t; ++i) {
    const int64_t rem = t - (k + 1) * i;
    if (rem % k != 0) continue;
    const int64_t j = rem / k;
    if (j <= vk1 && k * i + (k - 1) * j <= vm1) contains = true;
  }
  if (t < 0) contains = false;
  check.frobenius_avoiding = !contains;
  return check;
}

FamilySpec FamilyParameters(int64_t k, int64_t t) {
  const DivisibilityReport div = DivisibilityCondition(k, t);
  if (div.holds) {
    throw std::invalid_argument(
        "divisibility condition holds for k=" + std::to_string(k) +
        ", t=" + std::to_string(t) + "; the constant is finite");
  }
  FamilySpec spec;
  spec.k = k;
  spec.t = t;
  spec.q = *div.failing_prime_power;
  // Coprime split a + b = q with a, b <= k.
  if (spec.q == 2) {
    spec.a = 1;
    spec.b = 1;
  } else if (spec.q % 2 == 1) {
    spec.a = (spec.q + 1) / 2;
    spec.b = (spec.q - 1) / 2;
  } else {
    spec.a = spec.q / 2 + 1;
    spec.b = spec.q / 2 - 1;
  }
  spec.generator = BuildBlock(spec.a, spec.b, k);
  return spec;
}

Family FamilyGenerator(int64_t k, int64_t t, int64_t min_length,
                       const DetectOptions& options) {
  if (min_length < 1) throw std::invalid_argument("min_length must be >= 1");
  Family family;
  family.spec = FamilyParameters(k, t);
  const int64_t q = family.spec.q;
  family.copies = (min_length + q - 1) / q;
  family.sequence =
      AppendBlocks(BoundedSequence(k), family.spec.generator, family.copies);
  family.verified_avoiding = IsTAvoiding(family.sequence, t, options);
  if (!family.verified_avoiding) {
    throw std::logic_error("family sequence failed t-avoidance check");
  }
  return family;
}

GreedyBoundRow GreedyBoundEvaluate(int64_t k, int64_t alpha, int64_t beta) {
  if (k < 1 || alpha < 1 || beta < 1 || alpha > k || beta > k) {
    throw std::invalid_argument("greedy bound needs 1 <= alpha, beta <= k");
  }
  GreedyBoundRow row;
  row.k = k;
  row.alpha = alpha;
  row.beta = beta;
  row.g = std::gcd(alpha, beta);
  // Largest positive value other than alpha.
  row.maxpos = alpha == k ? k - 1 : k;
  row.alpha_copies = beta / row.g - 1;
  row.maxpos_copies = alpha + beta - 1;
  row.beta_copies = (k * k - k + (alpha + beta) / row.g) - row.alpha_copies -
                    row.maxpos_copies;
  row.best_sum = alpha * row.alpha_copies + row.maxpos * row.maxpos_copies -
                 beta * row.beta_copies;
  return row;
}

std::vector<GreedyBoundRow> GreedyBoundTable() {
  std::vector<GreedyBoundRow> rows;
  for (int64_t k = 4; k <= 6; ++k) {
    for (int64_t beta = 2; beta <= k; ++beta) {
      for (int64_t alpha = 1; alpha <= k; ++alpha) {
        rows.push_back(GreedyBoundEvaluate(k, alpha, beta));
      }
    }
  }
  return rows;
}

std::vector<GreedyBoundRow> GreedyCounterexampleSearch() {
  std::vector<GreedyBoundRow> flagged;
  for (const GreedyBoundRow& row : GreedyBoundTable()) {
    if (row.counterexample()) flagged.push_back(row);
  }
  return flagged;
}

}  // namespace zerosum
