#include "cli.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selftest/properties.h"
#include "zerosum/constants.h"
#include "zerosum/detect.h"
#include "zerosum/json_io.h"
#include "zerosum/reduction.h"
#include "zerosum/search.h"
#include "zerosum/sequence.h"

namespace zerosum::cli {
namespace {

// Usage problems found after CLI11 parsing (exit status 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  ExitStatus status = kOk;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;
};

struct GlobalOptions {
  bool json = false;
  int64_t memory_limit_mb = 1024;
  int threads = 1;
};

struct SequenceInput {
  std::string text;
  std::string file;
  std::optional<int64_t> k;

  BoundedSequence Load() const {
    if (text.empty() == file.empty()) {
      throw UsageError("exactly one of --seq and --seq-file is required");
    }
    std::string body = text;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot read " + file);
      std::stringstream buf;
      buf << in.rdbuf();
      body = buf.str();
    }
    // "--seq ''" still means the empty sequence.
    return ParseSequence(body, k);
  }
};

void AddSequenceOptions(CLI::App* app, SequenceInput& in) {
  app->add_option("--seq", in.text, "sequence, e.g. \"2^1,1^2,-1^4\"");
  app->add_option("--seq-file", in.file, "file holding the sequence text");
  app->add_option("--k", in.k, "bound k (default: max |value|)")
      ->check(CLI::PositiveNumber);
}

std::vector<int64_t> ParseIntList(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int64_t v = std::stoll(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad integer in list: '" + item + "'");
    }
  }
  return out;
}

bool IsSequenceJson(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("k") &&
         j.contains("terms");
}

std::string RenderScalar(const Json& j) {
  if (IsSequenceJson(j)) {
    return "[" + FormatSequence(SequenceFromJson(j)) + "]";
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() &&
      std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
    std::string out;
    for (const Json& e : j) {
      if (!out.empty()) out += ",";
      out += e.is_string() ? e.get<std::string>() : e.dump();
    }
    return out;
  }
  return j.dump();
}

void RenderHuman(const Json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const bool nested_object = v.is_object() && !IsSequenceJson(v);
    const bool nested_list =
        v.is_array() && !v.empty() && (v.front().is_object());
    if (nested_object) {
      out << indent << it.key() << ":\n";
      RenderHuman(v, out, indent + "  ");
    } else if (nested_list) {
      out << indent << it.key() << ": (" << v.size() << ")\n";
      for (const Json& e : v) {
        if (IsSequenceJson(e)) {
          out << indent << "  - " << RenderScalar(e) << "\n";
        } else {
          out << indent << "  -\n";
          RenderHuman(e, out, indent + "    ");
        }
      }
    } else {
      out << indent << it.key() << ": " << RenderScalar(v) << "\n";
    }
  }
}

const char* StatusName(ExitStatus s) {
  switch (s) {
    case kOk:
      return "ok";
    case kIncomplete:
      return "incomplete";
    default:
      return "error";
  }
}

void Emit(const std::string& command, const Outcome& outcome,
          const GlobalOptions& global, std::ostream& out, std::ostream& err) {
  for (const auto& d : outcome.diagnostics) err << d << "\n";
  if (global.json) {
    Json envelope{{"status", StatusName(outcome.status)},
                  {"command", command},
                  {"payload", outcome.payload},
                  {"diagnostics", outcome.diagnostics}};
    out << envelope.dump() << "\n";
  } else if (outcome.status == kOk || outcome.status == kIncomplete) {
    RenderHuman(outcome.payload, out, "");
  }
}

Outcome ErrorOutcome(ExitStatus status, const std::string& message) {
  Outcome o;
  o.status = status;
  o.payload = Json{{"message", message}};
  o.diagnostics.push_back("error: " + message);
  return o;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero-sum sequences over [-k, k]: detection, constants, "
               "reductions and searches.",
               "zss"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_flag("--json", global.json, "emit one JSON document on stdout");
  app.add_option("--memory-limit-mb", global.memory_limit_mb,
                 "cap for DP tables (MiB)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", global.threads, "worker threads for searches")
      ->check(CLI::Range(1, 256));

  auto detect_options = [&] {
    DetectOptions o;
    o.memory_limit_bytes = static_cast<size_t>(global.memory_limit_mb) << 20;
    return o;
  };

  std::map<CLI::App*, std::function<Outcome()>> handlers;

  // check
  SequenceInput check_seq;
  int64_t check_t = 0;
  bool check_frobenius = false;
  {
    auto* sub = app.add_subcommand("check", "is the sequence t-avoiding?");
    AddSequenceOptions(sub, check_seq);
    sub->add_option("--t", check_t, "subsequence length")->required();
    sub->add_flag("--frobenius", check_frobenius,
                  "also run the Frobenius cross-check (support in {-1,k-1,k})");
    handlers[sub] = [&] {
      const BoundedSequence s = check_seq.Load();
      const auto w = FindZeroSumOfLength(s, check_t, detect_options());
      Outcome o;
      o.payload = Json{{"sequence", ToJson(s)},
                       {"t", check_t},
                       {"length", s.Length()},
                       {"sum", s.Sum()},
                       {"avoiding", !w.has_value()},
                       {"witness", w ? ToJson(w->subsequence) : Json(nullptr)}};
      if (check_frobenius) {
        const FrobeniusCheck f = VerifyFrobeniusAvoidance(s.bound(), check_t, s);
        o.payload["frobenius"] = Json{{"dp_avoiding", f.dp_avoiding},
                                      {"frobenius_avoiding", f.frobenius_avoiding},
                                      {"agree", f.agree()}};
        if (!f.agree()) {
          o.status = kDomainError;
          o.diagnostics.push_back("error: DP and Frobenius criteria disagree");
        }
      }
      return o;
    };
  }

  // spectrum
  SequenceInput spectrum_seq;
  {
    auto* sub = app.add_subcommand("spectrum", "all zero-sum subsequence lengths");
    AddSequenceOptions(sub, spectrum_seq);
    handlers[sub] = [&] {
      const BoundedSequence s = spectrum_seq.Load();
      Outcome o;
      o.payload = ToJson(ComputeSpectrum(s, detect_options()));
      return o;
    };
  }

  // constant / bounds / divides share --k --t.
  int64_t kt_k = 0, kt_t = 0;
  auto add_kt = [&](CLI::App* sub) {
    sub->add_option("--k", kt_k, "bound k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--t", kt_t, "length t")->required()->check(CLI::PositiveNumber);
  };
  {
    auto* sub = app.add_subcommand("constant", "s'_t([-k,k])");
    add_kt(sub);
    handlers[sub] = [&] {
      Outcome o;
      o.payload = Json{{"k", kt_k}, {"t", kt_t}, {"value", ToJson(SPrimeT(kt_k, kt_t))}};
      return o;
    };
  }
  {
    auto* sub = app.add_subcommand("bounds", "general lower and upper bounds");
    add_kt(sub);
    handlers[sub] = [&] {
      const ConstantBounds b = BoundsForConstant(kt_k, kt_t);
      Outcome o;
      o.payload = Json{{"k", kt_k}, {"t", kt_t}, {"lower", b.lower},
                       {"upper", b.upper}, {"value", ToJson(SPrimeT(kt_k, kt_t))}};
      return o;
    };
  }
  {
    auto* sub = app.add_subcommand("divides", "lcm(2..max(2,2k-1)) | t ?");
    add_kt(sub);
    handlers[sub] = [&] {
      Outcome o;
      o.payload = ToJson(DivisibilityCondition(kt_k, kt_t));
      return o;
    };
  }

  // search-longest / extremal
  int64_t search_k = 0, search_t = 0, search_ceiling = 0;
  SearchOptions search_opts;
  bool search_progress = false;
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--k", search_k, "bound k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--t", search_t, "length t")->required()->check(CLI::PositiveNumber);
    sub->add_option("--node-limit", search_opts.node_limit, "0 = unlimited")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--time-limit", search_opts.time_limit_seconds,
                    "seconds, 0 = unlimited")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--long-running", search_opts.allow_long_running,
                  "allow k >= 3");
    sub->add_flag("--progress", search_progress,
                  "periodic progress lines on stderr");
  };
  auto configure_search = [&] {
    search_opts.threads = global.threads;
    if (search_progress) {
      search_opts.progress = [&err](const SearchProgress& p) {
        err << "progress: length " << p.level << " nodes " << p.nodes << "\n";
      };
    }
  };
  {
    auto* sub = app.add_subcommand("search-longest",
                                   "longest zero-sum t-avoiding sequence");
    add_search(sub);
    sub->add_option("--ceiling", search_ceiling, "largest length examined")
        ->required();
    sub->add_option("--max-witnesses", search_opts.max_witnesses)
        ->check(CLI::PositiveNumber);
    handlers[sub] = [&] {
      configure_search();
      const SearchResult r =
          LongestAvoiding(search_k, search_t, search_ceiling, search_opts);
      Outcome o;
      o.payload = ToJson(r);
      if (r.cap_hit) {
        o.status = kIncomplete;
        o.diagnostics.push_back("search stopped at a node or time cap");
      }
      return o;
    };
  }
  {
    auto* sub = app.add_subcommand(
        "extremal", "all t-avoiding sequences of length t+k^2-k-1");
    add_search(sub);
    handlers[sub] = [&] {
      configure_search();
      const ExtremalReport r = EnumerateExtremal(search_k, search_t, search_opts);
      Outcome o;
      o.payload = ToJson(r);
      if (!r.complete) {
        o.status = kIncomplete;
        o.diagnostics.push_back("enumeration stopped at a node or time cap");
      }
      return o;
    };
  }

  // family
  int64_t family_min_length = 0;
  {
    auto* sub = app.add_subcommand(
        "family", "arbitrarily long t-avoiding family when lcm does not divide t");
    add_kt(sub);
    sub->add_option("--min-length", family_min_length)->required()->check(CLI::PositiveNumber);
    handlers[sub] = [&] {
      Outcome o;
      o.payload = ToJson(FamilyGenerator(kt_k, kt_t, family_min_length,
                                         detect_options()));
      return o;
    };
  }

  // reduce / strip / complete-block
  SequenceInput block_seq;
  std::optional<int64_t> block_alpha, block_beta, reduce_n, reduce_blocks;
  auto add_block = [&](CLI::App* sub, bool required) {
    AddSequenceOptions(sub, block_seq);
    auto* a = sub->add_option("--alpha", block_alpha, "positive block element")
                  ->check(CLI::PositiveNumber);
    auto* b = sub->add_option("--beta", block_beta, "block's negative element is -beta")
                  ->check(CLI::PositiveNumber);
    if (required) {
      a->required();
      b->required();
    }
  };
  auto block_for = [&](const BoundedSequence& s) {
    return BuildBlock(*block_alpha, *block_beta, s.bound());
  };
  {
    auto* sub = app.add_subcommand(
        "reduce", "append blocks and rewrite to the reduction fixpoint");
    add_block(sub, false);
    sub->add_option("--n", reduce_n, "avoided length used to pick alpha, beta")
        ->check(CLI::PositiveNumber);
    sub->add_option("--blocks", reduce_blocks, "blocks appended (default n*k)")
        ->check(CLI::NonNegativeNumber);
    handlers[sub] = [&] {
      const BoundedSequence s = block_seq.Load();
      if (block_alpha.has_value() != block_beta.has_value()) {
        throw UsageError("--alpha and --beta go together");
      }
      if (!block_alpha) {
        if (!reduce_n) throw UsageError("give --alpha/--beta or --n");
        const auto pair = FrequentElements(s, *reduce_n);
        if (!pair) {
          throw std::invalid_argument("no alpha, -beta occur k n/(k+1) times");
        }
        block_alpha = pair->alpha;
        block_beta = pair->beta;
      }
      const BlockX x = block_for(s);
      const int64_t blocks =
          reduce_blocks.value_or(reduce_n ? DefaultBlockCount(*reduce_n, s.bound()) : 0);
      const ReductionTrace trace =
          ReduceFixpoint(AppendBlocks(s, x, blocks), x, detect_options());
      Outcome o;
      o.payload = ToJson(trace);
      o.payload["blocks_appended"] = blocks;
      o.payload["foreign_count"] = ForeignCount(trace.fixpoint, x);
      return o;
    };
  }
  {
    auto* sub = app.add_subcommand("strip", "remove the maximal number of blocks");
    add_block(sub, true);
    handlers[sub] = [&] {
      const BoundedSequence s = block_seq.Load();
      const StripResult r = StripBlocks(s, block_for(s));
      Outcome o;
      o.payload = Json{{"stripped", ToJson(r.stripped)}, {"count", r.count}};
      return o;
    };
  }
  {
    auto* sub = app.add_subcommand(
        "complete-block", "pad with alpha and -beta to a zero-sum sequence");
    add_block(sub, true);
    handlers[sub] = [&] {
      const BoundedSequence s = block_seq.Load();
      const BoundedSequence r = CompleteBlock(s, block_for(s));
      Outcome o;
      o.payload = Json{{"input", ToJson(s)}, {"result", ToJson(r)},
                       {"added", ToJson(Remove(r, s.WithBound(r.bound())))}};
      return o;
    };
  }

  // davenport
  std::string dav_values;
  int64_t dav_modulus = 0;
  {
    auto* sub = app.add_subcommand(
        "davenport", "consecutive block summing to 0 mod N");
    sub->add_option("--values", dav_values, "comma-separated integers")->required();
    sub->add_option("--modulus", dav_modulus, "N")->required()->check(CLI::PositiveNumber);
    handlers[sub] = [&] {
      const DavenportBlock b = DavenportSubset(ParseIntList(dav_values), dav_modulus);
      int64_t sum = 0;
      for (int64_t v : b.values) sum += v;
      Outcome o;
      o.payload = Json{{"modulus", dav_modulus},
                       {"begin", b.begin},
                       {"end", b.end},
                       {"values", b.values},
                       {"sum", sum}};
      return o;
    };
  }

  // frobenius
  int64_t frob_a = 0, frob_b = 0;
  {
    auto* sub = app.add_subcommand("frobenius", "Frobenius number ab - a - b");
    sub->add_option("--a", frob_a)->required();
    sub->add_option("--b", frob_b)->required();
    handlers[sub] = [&] {
      Outcome o;
      o.payload = Json{{"a", frob_a}, {"b", frob_b},
                       {"value", FrobeniusNumber(frob_a, frob_b)}};
      return o;
    };
  }

  // lemma41
  int64_t l41_t = 420, l41_n = 29;
  {
    auto* sub = app.add_subcommand("lemma41", "k = 4 frequency margins");
    sub->add_option("--t", l41_t, "default 420")->check(CLI::PositiveNumber);
    sub->add_option("--n", l41_n, "default 29")->check(CLI::NonNegativeNumber);
    handlers[sub] = [&] {
      Outcome o;
      o.payload = ToJson(FrequencyMarginCheck(l41_t, l41_n));
      return o;
    };
  }

  // lemma42
  bool l42_all = false;
  {
    auto* sub = app.add_subcommand("lemma42", "greedy counterexample search, k = 4..6");
    sub->add_flag("--all", l42_all, "list every evaluated row");
    handlers[sub] = [&] {
      Json flagged = Json::array();
      for (const auto& row : GreedyCounterexampleSearch()) flagged.push_back(ToJson(row));
      const auto table = GreedyBoundTable();
      Outcome o;
      o.payload = Json{{"rows_checked", table.size()},
                       {"counterexamples", std::move(flagged)}};
      if (l42_all) {
        Json rows = Json::array();
        for (const auto& row : table) rows.push_back(ToJson(row));
        o.payload["rows"] = std::move(rows);
      }
      return o;
    };
  }

  // lcm-check
  int64_t lcm_k = 0;
  {
    auto* sub = app.add_subcommand("lcm-check", "lcm(2..2k-1) >= 4k^4 ?");
    sub->add_option("--k", lcm_k)->required()->check(CLI::Range(int64_t{2}, kMaxLcmK));
    handlers[sub] = [&] {
      const BigInt kk = lcm_k;
      Outcome o;
      o.payload = Json{{"k", lcm_k},
                       {"lcm", ToJson(LcmRange(2, 2 * lcm_k - 1))},
                       {"threshold", ToJson(BigInt(4 * kk * kk * kk * kk))},
                       {"holds", LcmGrowthCheck(lcm_k)}};
      return o;
    };
  }

  // lambert
  int64_t lambert_k = 0;
  {
    auto* sub = app.add_subcommand(
        "lambert", "longest minimal zero-sum sequence over [-k,k] (k <= 4)");
    sub->add_option("--k", lambert_k)->required()->check(CLI::Range(1, 4));
    handlers[sub] = [&] {
      const int64_t found = MinimalZeroSumMaxLength(lambert_k);
      const int64_t formula = std::max<int64_t>(2, 2 * lambert_k - 1);
      Outcome o;
      o.payload = Json{{"k", lambert_k},
                       {"max_minimal_length", found},
                       {"formula", formula},
                       {"matches", found == formula}};
      return o;
    };
  }

  // selftest
  selftest::PropertyConfig st_config;
  {
    auto* sub = app.add_subcommand("selftest", "run the property suites");
    sub->add_option("--seed", st_config.seed);
    sub->add_option("--cases", st_config.cases, "cases per randomized suite")
        ->check(CLI::PositiveNumber);
    sub->add_option("--foreign-cases", st_config.foreign_cases)
        ->check(CLI::PositiveNumber);
    sub->add_option("--davenport-cases", st_config.davenport_cases)
        ->check(CLI::PositiveNumber);
    handlers[sub] = [&] {
      Json suites = Json::array();
      bool all = true;
      for (const auto& p : selftest::RunAll(st_config)) {
        all &= p.passed();
        suites.push_back(Json{{"name", p.name},
                              {"cases", p.cases},
                              {"failures", p.failures},
                              {"first_failure", p.first_failure}});
      }
      Outcome o;
      o.payload = Json{{"passed", all}, {"suites", std::move(suites)}};
      if (!all) {
        o.status = kDomainError;
        o.diagnostics.push_back("selftest: property failures");
      }
      return o;
    };
  }

  std::vector<const char*> argv{"zss"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    out << app.help();
    for (CLI::App* sub : app.get_subcommands()) out << sub->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    Emit("", ErrorOutcome(kUsageError, msg), global, out, err);
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Outcome outcome;
  try {
    outcome = handlers.at(chosen)();
  } catch (const UsageError& e) {
    outcome = ErrorOutcome(kUsageError, e.what());
  } catch (const ParseError& e) {
    outcome = ErrorOutcome(kUsageError, e.what());
  } catch (const ResourceLimitError& e) {
    outcome = ErrorOutcome(kIncomplete, e.what());
  } catch (const std::invalid_argument& e) {
    outcome = ErrorOutcome(kDomainError, e.what());
  } catch (const std::exception& e) {
    outcome = ErrorOutcome(kDomainError, e.what());
  }
  Emit(name, outcome, global, out, err);
  return outcome.status;
}

}  // namespace zerosum::cli
