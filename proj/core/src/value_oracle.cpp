#include "sfmlab/value_oracle.hpp"

#include <set>
#include <string>

#include "sfmlab/errors.hpp"

namespace sfmlab {

std::size_t QueryTranscript::distinct_count() const {
  std::set<Subset> seen;
  for (const auto& e : entries_) seen.insert(e.set);
  return seen.size();
}

bool QueryTranscript::replays_against(const SetFunction& f) const {
  for (const auto& e : entries_) {
    if (f(e.set) != e.value) return false;
  }
  return true;
}

ValueOracle::ValueOracle(int n, SetFunction f) : n_(n), f_(std::move(f)) {
  if (n < 1 || n > kMaxGroundSize) {
    throw InvalidArgumentError("oracle ground-set size " + std::to_string(n) + " out of range");
  }
}

Rational ValueOracle::evaluate(const Subset& s) {
  if (s.ground_size() != n_) {
    throw SizeMismatchError("query over ground set of size " + std::to_string(s.ground_size()) +
                            " sent to oracle of size " + std::to_string(n_));
  }
  Rational value = f_(s);
  transcript_.append(s, value);
  return value;
}

}  // namespace sfmlab
