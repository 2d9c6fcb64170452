#pragma once

#include <cstddef>

#include "sfmlab/value_oracle.hpp"

namespace sfmlab {

struct SolverResult {
  Rational min_value;
  Subset argmin;
  // Oracle counter delta over the solve.
  std::size_t queries_used;
};

// Queries every in-scope subset once, in bitmask order; the argmin is the
// first subset attaining the minimum.
SolverResult brute_force_sfm(ValueOracle& oracle, bool nontrivial);

// Nontrivial minimization through 2n constrained problems: for every i, sets
// containing i but not i + 1, then sets containing i but not i − 1 (indices
// cyclic). Each constrained problem is scanned exhaustively. Requires n ≥ 2.
SolverResult nontrivial_via_reduction(ValueOracle& oracle);

// Queyranne's pendant-pair algorithm for symmetric submodular functions.
// Each phase orders the current groups by f(W ∪ u) − f(u), records the last
// group as a candidate cut, and merges the last two. With verify_symmetry the
// underlying function is checked first (n ≤ 12), without spending queries.
SolverResult queyranne_minimize(ValueOracle& oracle, bool verify_symmetry = false);

// Bound asserted for queyranne_minimize's query accounting.
inline std::size_t queyranne_query_bound(int n) {
  const auto m = static_cast<std::size_t>(n);
  return m * m * m + 3 * m * m;
}

}  // namespace sfmlab
