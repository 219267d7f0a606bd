#include "zerosum/json_io.h"

#include <limits>
#include <string>

namespace zerosum {
namespace {

Json SequenceList(const std::vector<BoundedSequence>& list) {
  Json out = Json::array();
  for (const auto& s : list) out.push_back(ToJson(s));
  return out;
}

Json Margin(const MarginBranch& b) {
  return Json{{"lhs", std::to_string(b.lhs_num) + "/" + std::to_string(b.lhs_den)},
              {"rhs", std::to_string(b.rhs_num) + "/" + std::to_string(b.rhs_den)},
              {"holds", b.holds}};
}

}  // namespace

Json ToJson(const BoundedSequence& s) {
  Json terms = Json::array();
  for (const auto& [value, mult] : s.terms()) {
    terms.push_back(Json{{"value", value}, {"mult", mult}});
  }
  return Json{{"k", s.bound()}, {"terms", std::move(terms)}};
}

BoundedSequence SequenceFromJson(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("k") || !j.contains("terms")) {
      throw std::invalid_argument("sequence JSON needs \"k\" and \"terms\"");
    }
    BoundedSequence::Terms terms;
    for (const Json& term : j.at("terms")) {
      const int64_t mult = term.at("mult").get<int64_t>();
      if (mult < 1) throw std::invalid_argument("mult must be positive");
      int64_t& slot = terms[term.at("value").get<int64_t>()];
      if (__builtin_add_overflow(slot, mult, &slot)) {
        throw std::overflow_error("multiplicity overflow");
      }
    }
    return BoundedSequence(j.at("k").get<int64_t>(), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad sequence JSON: ") + e.what());
  }
}

Json ToJson(const BigInt& v) {
  if (v <= std::numeric_limits<int64_t>::max() &&
      v >= std::numeric_limits<int64_t>::min()) {
    return Json(v.convert_to<int64_t>());
  }
  return Json(v.str());
}

Json ToJson(const ConstantValue& v) {
  return v.is_finite() ? Json(v.value()) : Json("infinite");
}

Json ToJson(const DivisibilityReport& r) {
  Json out{{"k", r.k}, {"t", r.t}, {"modulus", ToJson(r.modulus)},
           {"holds", r.holds}};
  out["failing_prime_power"] =
      r.failing_prime_power ? Json(*r.failing_prime_power) : Json(nullptr);
  return out;
}

Json ToJson(const Witness& w) {
  return Json{{"target_length", w.target_length},
              {"subsequence", ToJson(w.subsequence)}};
}

Json ToJson(const Spectrum& s) { return Json{{"lengths", s.lengths}}; }

Json ToJson(const BlockX& x) {
  return Json{{"alpha", x.alpha}, {"beta", x.beta}, {"g", x.g},
              {"length", x.Length()}, {"block", ToJson(x.block)}};
}

Json ToJson(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    const BoundedSequence inserted =
        AppendBlocks(BoundedSequence(trace.block.block.bound()), trace.block,
                     step.blocks_inserted);
    steps.push_back(Json{{"removed", ToJson(step.removed)},
                         {"inserted", ToJson(inserted)},
                         {"blocks", step.blocks_inserted}});
  }
  return Json{{"block", ToJson(trace.block)},
              {"initial", ToJson(trace.initial)},
              {"steps", std::move(steps)},
              {"fixpoint", ToJson(trace.fixpoint)},
              {"stripped", ToJson(trace.stripped)},
              {"strip_count", trace.strip_count}};
}

Json ToJson(const SearchResult& r) {
  return Json{{"k", r.k},
              {"t", r.t},
              {"ceiling", r.ceiling},
              {"best_length", r.best_length},
              {"exhaustive", r.exhaustive},
              {"cap_hit", r.cap_hit},
              {"nodes_explored", r.nodes_explored},
              {"witnesses", SequenceList(r.witnesses)}};
}

Json ToJson(const LevelScan& r) {
  return Json{{"k", r.k},           {"t", r.t},
              {"length", r.length}, {"count", r.count},
              {"complete", r.complete}, {"nodes", r.nodes},
              {"sequences", SequenceList(r.sequences)}};
}

Json ToJson(const ExtremalReport& r) {
  return Json{{"k", r.k},
              {"t", r.t},
              {"length", r.length},
              {"count", static_cast<int64_t>(r.sequences.size())},
              {"support_ok", r.support_ok},
              {"degenerate", r.degenerate},
              {"complete", r.complete},
              {"sequences", SequenceList(r.sequences)}};
}

Json ToJson(const Family& f) {
  return Json{{"k", f.spec.k},
              {"t", f.spec.t},
              {"q", f.spec.q},
              {"a", f.spec.a},
              {"b", f.spec.b},
              {"generator", ToJson(f.spec.generator)},
              {"copies", f.copies},
              {"length", f.sequence.Length()},
              {"verified_avoiding", f.verified_avoiding},
              {"sequence", ToJson(f.sequence)}};
}

Json ToJson(const GreedyBoundRow& row) {
  return Json{{"k", row.k},
              {"alpha", row.alpha},
              {"beta", row.beta},
              {"g", row.g},
              {"maxpos", row.maxpos},
              {"alpha_copies", row.alpha_copies},
              {"maxpos_copies", row.maxpos_copies},
              {"beta_copies", row.beta_copies},
              {"best_sum", row.best_sum}};
}

Json ToJson(const FrequencyMargins& m) {
  return Json{{"t", m.t},
              {"n", m.n},
              {"spread", Margin(m.spread)},
              {"concentrated", Margin(m.concentrated)},
              {"holds", m.holds()}};
}

}  // namespace zerosum
