#include "cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zerosum::cli {
namespace {

struct Invocation {
  int status = -1;
  std::string out;
  std::string err;
  nlohmann::json doc;
};

Invocation Call(std::vector<std::string> args) {
  Invocation inv;
  std::ostringstream out, err;
  inv.status = Run(args, out, err);
  inv.out = out.str();
  inv.err = err.str();
  if (!args.empty() && args.front() == "--json") {
    inv.doc = nlohmann::json::parse(inv.out);
  }
  return inv;
}

Invocation Json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return Call(std::move(args));
}

TEST(Cli, CheckAvoidingExample) {
  const Invocation r = Json({"check", "--t", "6", "--seq", "2^1,1^2,-1^4"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.doc["status"], "ok");
  EXPECT_EQ(r.doc["command"], "check");
  EXPECT_EQ(r.doc["payload"]["avoiding"], true);
  EXPECT_TRUE(r.doc["payload"]["witness"].is_null());
}

TEST(Cli, CheckReportsWitness) {
  const Invocation r = Json({"check", "--t", "2", "--seq", "2^1,1^2,-1^4"});
  EXPECT_EQ(r.doc["payload"]["avoiding"], false);
  EXPECT_EQ(r.doc["payload"]["witness"]["terms"].size(), 2u);
}

TEST(Cli, CheckWithFrobenius) {
  const Invocation r =
      Json({"check", "--t", "60", "--seq", "3^14,2^3,-1^48", "--frobenius"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.doc["payload"]["frobenius"]["agree"], true);
  EXPECT_EQ(r.doc["payload"]["avoiding"], true);
}

TEST(Cli, ConstantAndBounds) {
  EXPECT_EQ(Json({"constant", "--k", "2", "--t", "6"}).doc["payload"]["value"], 8);
  EXPECT_EQ(Json({"constant", "--k", "2", "--t", "7"}).doc["payload"]["value"],
            "infinite");
  const Invocation b = Json({"bounds", "--k", "4", "--t", "420"});
  EXPECT_EQ(b.doc["payload"]["lower"], 432);
  EXPECT_EQ(b.doc["payload"]["upper"], 450);
  const Invocation bad = Json({"bounds", "--k", "2", "--t", "7"});
  EXPECT_EQ(bad.status, kDomainError);
  EXPECT_EQ(bad.doc["status"], "error");
}

TEST(Cli, Spectrum) {
  const Invocation r = Json({"spectrum", "--seq", "10^9,-9^10"});
  EXPECT_EQ(r.doc["payload"]["lengths"], nlohmann::json::array({0, 19}));
}

TEST(Cli, Divides) {
  const Invocation r = Json({"divides", "--k", "2", "--t", "7"});
  EXPECT_EQ(r.doc["payload"]["holds"], false);
  EXPECT_EQ(r.doc["payload"]["failing_prime_power"], 2);
}

TEST(Cli, SearchLongest) {
  const Invocation r =
      Json({"search-longest", "--k", "2", "--t", "6", "--ceiling", "12"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.doc["payload"]["best_length"], 7);
  EXPECT_EQ(r.doc["payload"]["exhaustive"], true);
}

TEST(Cli, SearchCapExitsIncomplete) {
  const Invocation r = Json({"search-longest", "--k", "2", "--t", "6", "--ceiling",
                             "12", "--node-limit", "1"});
  EXPECT_EQ(r.status, kIncomplete);
  EXPECT_EQ(r.doc["status"], "incomplete");
  EXPECT_EQ(r.doc["payload"]["cap_hit"], true);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SearchKThreeNeedsLongRunningFlag) {
  const Invocation r =
      Json({"search-longest", "--k", "3", "--t", "60", "--ceiling", "70"});
  EXPECT_EQ(r.status, kDomainError);
}

TEST(Cli, ProgressGoesToStderr) {
  const Invocation r = Json({"--threads", "2", "search-longest", "--k", "2", "--t",
                             "6", "--ceiling", "12", "--progress"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.doc["payload"]["best_length"], 7);
}

TEST(Cli, Extremal) {
  const Invocation r = Json({"extremal", "--k", "2", "--t", "6"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.doc["payload"]["length"], 7);
  EXPECT_EQ(r.doc["payload"]["support_ok"],
            false);  // see the k = 2 counterexample in search_test
}

TEST(Cli, Family) {
  const Invocation r = Json({"family", "--k", "3", "--t", "8", "--min-length", "40"});
  EXPECT_EQ(r.doc["payload"]["q"], 3);
  EXPECT_EQ(r.doc["payload"]["verified_avoiding"], true);
  EXPECT_EQ(Json({"family", "--k", "2", "--t", "6", "--min-length", "10"}).status,
            kDomainError);
}

TEST(Cli, ReduceStripComplete) {
  const Invocation red = Json({"reduce", "--seq", "3^1,-1^7,1^4", "--alpha", "1",
                               "--beta", "1"});
  EXPECT_EQ(red.status, kOk);
  EXPECT_EQ(red.doc["payload"]["foreign_count"], 0);
  EXPECT_EQ(red.doc["payload"]["steps"].size(), 1u);

  const Invocation auto_pair = Json({"reduce", "--seq", "2^40,-1^80", "--n", "10"});
  EXPECT_EQ(auto_pair.doc["payload"]["block"]["alpha"], 2);
  EXPECT_EQ(auto_pair.doc["payload"]["blocks_appended"], 20);

  const Invocation strip = Json({"strip", "--seq", "10^10,-9^10", "--alpha", "10",
                                 "--beta", "9"});
  EXPECT_EQ(strip.doc["payload"]["count"], 1);

  const Invocation comp = Json({"complete-block", "--seq", "1^1", "--k", "3",
                                "--alpha", "3", "--beta", "2"});
  EXPECT_EQ(comp.doc["payload"]["result"]["terms"].size(), 3u);

  EXPECT_EQ(Json({"reduce", "--seq", "1^1,-1^1"}).status, kUsageError);
}

TEST(Cli, DavenportFrobeniusAndArithmeticChecks) {
  const Invocation d = Json({"davenport", "--values", "3,1,4", "--modulus", "3"});
  EXPECT_EQ(d.doc["payload"]["values"], nlohmann::json::array({3}));
  EXPECT_EQ(Json({"frobenius", "--a", "3", "--b", "4"}).doc["payload"]["value"], 5);
  EXPECT_EQ(Json({"frobenius", "--a", "4", "--b", "6"}).status, kDomainError);
  EXPECT_EQ(Json({"lemma41"}).doc["payload"]["holds"], true);
  EXPECT_EQ(Json({"lemma41", "--t", "417"}).doc["payload"]["holds"], false);
  EXPECT_TRUE(Json({"lemma42"}).doc["payload"]["counterexamples"].empty());
  EXPECT_EQ(Json({"lcm-check", "--k", "5"}).doc["payload"]["lcm"], 2520);
  EXPECT_EQ(Json({"lcm-check", "--k", "2"}).doc["payload"]["holds"], false);
  EXPECT_EQ(Json({"lambert", "--k", "3"}).doc["payload"]["max_minimal_length"], 5);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Call({}).status, kUsageError);
  EXPECT_EQ(Call({"nonsense"}).status, kUsageError);
  EXPECT_EQ(Call({"check", "--t", "6"}).status, kUsageError);
  EXPECT_EQ(Call({"check", "--t", "x", "--seq", "1^1"}).status, kUsageError);
  EXPECT_EQ(Call({"check", "--t", "6", "--seq", "1^"}).status, kUsageError);
  EXPECT_EQ(Call({"check", "--t", "6", "--seq", "3^2", "--k", "2"}).status, kUsageError);
  EXPECT_EQ(Call({"constant", "--k", "0", "--t", "6"}).status, kUsageError);
  EXPECT_EQ(Call({"lambert", "--k", "9"}).status, kUsageError);
  const Invocation r = Json({"check", "--seq", "1^1"});
  EXPECT_EQ(r.doc["status"], "error");
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, SequenceFromFile) {
  const std::string path = ::testing::TempDir() + "zss_seq.txt";
  std::ofstream(path) << "2^1,1^2,-1^4\n";
  const Invocation r = Json({"check", "--t", "6", "--seq-file", path});
  EXPECT_EQ(r.doc["payload"]["avoiding"], true);
  std::remove(path.c_str());
  EXPECT_EQ(Json({"check", "--t", "6", "--seq-file", path}).status, kUsageError);
  EXPECT_EQ(Json({"check", "--t", "6", "--seq-file", path, "--seq", "1^1"}).status,
            kUsageError);
}

TEST(Cli, HumanOutputPrintsSequencesAsText) {
  const Invocation r = Call({"search-longest", "--k", "2", "--t", "6", "--ceiling", "12"});
  EXPECT_NE(r.out.find("best_length: 7"), std::string::npos);
  EXPECT_NE(r.out.find("[-1^4,1^2,2^1]"), std::string::npos);
}

TEST(Cli, JsonModeEmitsExactlyOneDocument) {
  const Invocation r = Json({"lemma42", "--all"});
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_EQ(r.doc["payload"]["rows"].size(), 62u);
}

TEST(Cli, SelftestSmallRun) {
  const Invocation r = Json({"selftest", "--cases", "200", "--foreign-cases", "20",
                             "--davenport-cases", "500"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.doc["payload"]["passed"], true);
}

}  // namespace
}  // namespace zerosum::cli
