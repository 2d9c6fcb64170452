#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sfmlab/rational.hpp"
#include "sfmlab/subset.hpp"
#include "sfmlab/value_oracle.hpp"

namespace sfmlab {

// f(S) = Σ_{i∈S} f({i}) − Σ_{T⊆S} c(T) with non-negative costs that vanish on
// sets of size ≤ 1. Costs are sparse: only nonzero entries are stored.
class CostBasedInstance {
 public:
  using CostMap = std::map<Subset::Mask, Rational>;

  // Throws InvalidArgumentError on negative costs, nonzero costs on sets of
  // size ≤ 1, or keys outside [n]. Zero entries are dropped.
  CostBasedInstance(int n, std::vector<Rational> singletons, CostMap cost);

  int n() const { return n_; }
  const std::vector<Rational>& singletons() const { return singletons_; }
  const CostMap& cost() const { return cost_; }
  Rational cost_of(const Subset& t) const;

  Rational evaluate(const Subset& s) const;
  SetFunction as_function() const;

 private:
  int n_;
  std::vector<Rational> singletons_;
  CostMap cost_;
};

// The base function f and the C(n,2) variants f_ij, which agree with f
// everywhere except on the co-pair set [n] \ {i, j}.
class PairFamily {
 public:
  // Requires n ≥ 4: at n = 3 the co-pair sets are singletons and would need
  // nonzero singleton costs.
  explicit PairFamily(int n);

  int n() const { return n_; }
  const CostBasedInstance& base() const { return base_; }
  // 1 ≤ i < j ≤ n.
  const CostBasedInstance& variant(int i, int j) const;
  const std::map<std::pair<int, int>, CostBasedInstance>& variants() const { return variants_; }

  static Subset co_pair(int n, int i, int j) { return Subset::full(n).without(i).without(j); }

 private:
  int n_;
  CostBasedInstance base_;
  std::map<std::pair<int, int>, CostBasedInstance> variants_;
};

PairFamily make_pair_family(int n);

// A member of the pair family consistent with a transcript whose nontrivial
// minimum differs from the guess.
struct PairFoolingInstance {
  std::optional<std::pair<int, int>> variant;  // nullopt: the base function f
  CostBasedInstance instance;
  Rational nontrivial_minimum;
};

// Answers are assumed to come from the base f; throws InconsistencyError if
// any transcript entry disagrees with it. Returns nullopt only when every
// co-pair set was queried and the guess equals f's nontrivial minimum, 0.
std::optional<PairFoolingInstance> adversary_pairs(const QueryTranscript& transcript, const Rational& guess,
                                                   const PairFamily& family);

}  // namespace sfmlab
