#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "sfmlab/rational.hpp"
#include "sfmlab/subset.hpp"

namespace sfmlab {

// A set function over [n]. Evaluators built elsewhere in the library are pure;
// adversaries are stateful and must not be shared.
using SetFunction = std::function<Rational(const Subset&)>;

struct QueryRecord {
  Subset set;
  Rational value;
};

// Append-only log of oracle queries. Repeated queries are kept.
class QueryTranscript {
 public:
  void append(Subset set, Rational value) { entries_.push_back({set, std::move(value)}); }

  const std::vector<QueryRecord>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::size_t distinct_count() const;

  // True iff re-evaluating every recorded subset on `f` reproduces the answer.
  bool replays_against(const SetFunction& f) const;

 private:
  std::vector<QueryRecord> entries_;
};

// Black-box access to a set function with query accounting. Single owner:
// the counter and transcript are not synchronized.
class ValueOracle {
 public:
  ValueOracle(int n, SetFunction f);

  // Throws SizeMismatchError if s is over a different ground set.
  Rational evaluate(const Subset& s);

  int ground_size() const { return n_; }
  std::size_t query_count() const { return transcript_.size(); }
  const QueryTranscript& transcript() const { return transcript_; }

  // Uncounted access for verification harnesses; algorithms must use evaluate().
  const SetFunction& underlying() const { return f_; }

 private:
  int n_;
  SetFunction f_;
  QueryTranscript transcript_;
};

}  // namespace sfmlab
