// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance_test [--known-red N,M,...]
// Criteria listed as known red still print FAIL; the exit status is non-zero
// when any other criterion fails or when a known-red criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "json.hpp"
#include "selftest/oracle.h"
#include "selftest/properties.h"
#include "zerosum/constants.h"
#include "zerosum/detect.h"
#include "zerosum/search.h"

namespace zerosum {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> run;
};

nlohmann::json CliJson(const std::vector<std::string>& args, int* status) {
  std::ostringstream out, err;
  std::vector<std::string> full{"--json"};
  full.insert(full.end(), args.begin(), args.end());
  *status = cli::Run(full, out, err);
  return nlohmann::json::parse(out.str());
}

// Does some sub-multiset of the multiplicity vector over [-2, 2] have six
// elements and sum zero? Plain nested loops.
bool NaiveSixContaining(const std::vector<int64_t>& v) {
  for (int64_t a = 0; a <= v[0]; ++a)
    for (int64_t b = 0; b <= v[1]; ++b)
      for (int64_t c = 0; c <= v[2]; ++c)
        for (int64_t d = 0; d <= v[3]; ++d) {
          const int64_t e = 6 - a - b - c - d;
          if (e < 0 || e > v[4]) continue;
          if (-2 * a - b + d + 2 * e == 0) return true;
        }
  return false;
}

Verdict Criterion1() {
  int status = 0;
  const auto doc = CliJson({"search-longest", "--k", "2", "--t", "6", "--ceiling", "12"}, &status);
  const auto& p = doc["payload"];
  Verdict v;
  v.pass = status == 0 && p["best_length"] == 7 && p["exhaustive"] == true;
  v.detail = "best_length=" + p["best_length"].dump() + " exhaustive=" + p["exhaustive"].dump();
  return v;
}

Verdict Criterion2() {
  int64_t checked = 0, avoiding = 0;
  bool scans_agree = true;
  for (int64_t len = 8; len <= 20; ++len) {
    for (int64_t a = 0; a <= len; ++a)
      for (int64_t b = 0; a + b <= len; ++b)
        for (int64_t c = 0; a + b + c <= len; ++c)
          for (int64_t d = 0; a + b + c + d <= len; ++d) {
            const int64_t e = len - a - b - c - d;
            if (-2 * a - b + d + 2 * e != 0) continue;
            ++checked;
            if (!NaiveSixContaining({a, b, c, d, e})) ++avoiding;
          }
    const LevelScan scan = ScanAvoidingAtLength(2, 6, len);
    scans_agree = scans_agree && scan.complete && scan.count == 0;
  }
  Verdict v;
  v.pass = avoiding == 0 && scans_agree;
  v.detail = std::to_string(checked) + " zero-sum vectors, " + std::to_string(avoiding) +
             " 6-avoiding; level scans " + (scans_agree ? "agree" : "DISAGREE");
  return v;
}

Verdict Criterion3() {
  const ExtremalReport r = EnumerateExtremal(2, 6);
  int64_t outside = 0;
  std::string example;
  for (const auto& s : r.sequences) {
    if (!HasExtremalSupport(s, 2)) {
      if (example.empty()) example = FormatSequence(s);
      ++outside;
    }
  }
  Verdict v;
  v.pass = r.complete && r.support_ok;
  v.detail = std::to_string(r.sequences.size()) + " extremal sequences, " +
             std::to_string(outside) + " outside the three-value supports";
  if (!example.empty()) v.detail += " (e.g. " + example + ")";
  return v;
}

Verdict Criterion4() {
  const BoundedSequence s = ParseSequence("3^14,2^3,-1^48");
  const FrobeniusCheck f = VerifyFrobeniusAvoidance(3, 60, s);
  const bool part_a = s.Length() == 65 && s.Sum() == 0 && f.dp_avoiding && f.frobenius_avoiding;

  std::mt19937_64 rng(60066);
  int64_t misses = 0;
  for (int i = 0; i < 10000; ++i) {
    const BoundedSequence r = oracle::RandomZeroSum(rng, 3, 66);
    const auto w = FindZeroSumOfLength(r, 60);
    if (!w || w->subsequence.Length() != 60 || w->subsequence.Sum() != 0 ||
        !IsSubsequence(w->subsequence, r)) {
      ++misses;
    }
  }
  Verdict v;
  v.pass = part_a && misses == 0;
  v.detail = std::string("(a) dp=") + (f.dp_avoiding ? "avoiding" : "containing") +
             " frobenius=" + (f.frobenius_avoiding ? "avoiding" : "containing") +
             "; (b) " + std::to_string(misses) + "/10000 samples 60-avoiding";
  return v;
}

Verdict Criterion5() {
  Verdict v{true, ""};
  for (auto [k, t] : std::vector<std::pair<int64_t, int64_t>>{{2, 7}, {3, 8}, {4, 100}}) {
    const Family f = FamilyGenerator(k, t, 500);
    const bool ok = f.sequence.Length() >= 500 && f.sequence.Sum() == 0 &&
                    f.verified_avoiding && IsTAvoiding(f.sequence, t);
    v.pass = v.pass && ok;
    v.detail += "(" + std::to_string(k) + "," + std::to_string(t) + ") len=" +
                std::to_string(f.sequence.Length()) + (ok ? " ok; " : " BAD; ");
  }
  return v;
}

Verdict Criterion6() {
  const auto flagged = GreedyCounterexampleSearch();
  return {flagged.empty(), std::to_string(GreedyBoundTable().size()) + " rows, " +
                               std::to_string(flagged.size()) + " counterexamples"};
}

Verdict Criterion7() {
  const FrequencyMargins m = FrequencyMarginCheck();
  // 420/18 >= 116/5 by cross-multiplication, independently of the library.
  const bool direct = 420 * 5 >= 116 * 18;
  Verdict v;
  v.pass = m.holds() && direct && m.spread.lhs_num * 18 == 420 * m.spread.lhs_den &&
           m.spread.rhs_num == 116 && m.spread.rhs_den == 5;
  v.detail = std::to_string(m.spread.lhs_num) + "/" + std::to_string(m.spread.lhs_den) +
             " >= " + std::to_string(m.spread.rhs_num) + "/" +
             std::to_string(m.spread.rhs_den);
  return v;
}

Verdict Criterion8() {
  bool growth = true;
  for (int64_t k = 5; k <= 8; ++k) growth = growth && LcmGrowthCheck(k);
  const bool lcm = LcmRange(2, 7) == 420;
  return {growth && lcm, std::string("k=5..8 ") + (growth ? "hold" : "FAIL") +
                             ", lcm(2..7)=" + LcmRange(2, 7).str()};
}

Verdict Criterion9() {
  const selftest::PropertyConfig config;
  Verdict v{true, ""};
  for (const auto& o : selftest::RunAll(config)) {
    v.pass = v.pass && o.passed();
    v.detail += o.name + " " + std::to_string(o.failures) + "/" + std::to_string(o.cases) + "; ";
    if (!o.passed()) v.detail += "first failure: " + o.first_failure + "; ";
  }
  return v;
}

Verdict Criterion10() {
  Verdict v{true, ""};
  for (int64_t k = 1; k <= 3; ++k) {
    const int64_t got = MinimalZeroSumMaxLength(k);
    const int64_t want = std::max<int64_t>(2, 2 * k - 1);
    v.pass = v.pass && got == want;
    v.detail += "k=" + std::to_string(k) + ":" + std::to_string(got) + " ";
  }
  return v;
}

std::set<int> ParseKnownRed(int argc, char** argv) {
  std::set<int> out;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) != "--known-red") continue;
    std::stringstream ss(argv[i + 1]);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace
}  // namespace zerosum

int main(int argc, char** argv) {
  using namespace zerosum;
  const std::set<int> known_red = ParseKnownRed(argc, argv);
  const std::vector<Criterion> criteria{
      {1, "longest 6-avoiding length at k=2 is 7", Criterion1},
      {2, "no 6-avoiding zero-sum sequence of length 8..20 at k=2", Criterion2},
      {3, "extremal supports at k=2, t=6", Criterion3},
      {4, "k=3, t=60 spot checks", Criterion4},
      {5, "divergent families of length >= 500", Criterion5},
      {6, "greedy counterexample search is empty", Criterion6},
      {7, "k=4 frequency margins", Criterion7},
      {8, "lcm growth base cases", Criterion8},
      {9, "property suites", Criterion9},
      {10, "longest minimal zero-sum sequences", Criterion10},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool red = known_red.count(c.id) > 0;
    std::printf("%s %2d  %-55s %7.2fs  %s%s\n", v.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, v.detail.c_str(),
                red ? (v.pass ? "  [listed as known red but passed]" : "  [known red]") : "");
    if (v.pass == red) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
