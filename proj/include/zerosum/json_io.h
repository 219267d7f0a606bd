// JSON forms of the library's value types.
//
// A sequence is {"k": <int>, "terms": [{"value": <int>, "mult": <int>}, ...]}
// with terms in ascending value order.

#ifndef ZEROSUM_JSON_IO_H_
#define ZEROSUM_JSON_IO_H_

#include "json.hpp"
#include "zerosum/constants.h"
#include "zerosum/detect.h"
#include "zerosum/reduction.h"
#include "zerosum/search.h"
#include "zerosum/sequence.h"

namespace zerosum {

using Json = nlohmann::ordered_json;

Json ToJson(const BoundedSequence& s);
// Throws std::invalid_argument on a malformed document.
BoundedSequence SequenceFromJson(const Json& j);

// Integer when it fits in int64, decimal string otherwise.
Json ToJson(const BigInt& v);
Json ToJson(const ConstantValue& v);
Json ToJson(const DivisibilityReport& r);
Json ToJson(const Witness& w);
Json ToJson(const Spectrum& s);
Json ToJson(const BlockX& x);
Json ToJson(const ReductionTrace& trace);
Json ToJson(const SearchResult& r);
Json ToJson(const LevelScan& r);
Json ToJson(const ExtremalReport& r);
Json ToJson(const Family& f);
Json ToJson(const GreedyBoundRow& row);
Json ToJson(const FrequencyMargins& m);

}  // namespace zerosum

#endif  // ZEROSUM_JSON_IO_H_
