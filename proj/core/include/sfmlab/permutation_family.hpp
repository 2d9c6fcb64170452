#pragma once

#include <vector>

#include "sfmlab/rational.hpp"
#include "sfmlab/subset.hpp"
#include "sfmlab/value_oracle.hpp"

namespace sfmlab {

// The chain family: a permutation σ of [n] fixes the chain sets
// R_i = {σ(1), ..., σ(i)}; each R_i takes value −c_i with c_i ∈ {0, 1}, and
// every other set S takes (|S| − j(S)) · (n + 2 − j(S)) where j(S) is the
// longest chain prefix contained in S.
class PermutationInstance {
 public:
  // sigma[k] = σ(k + 1); c[i] = c_i for i = 0..n.
  PermutationInstance(int n, std::vector<int> sigma, std::vector<int> c);

  static PermutationInstance identity(int n, std::vector<int> c);

  int n() const { return n_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& c() const { return c_; }

  // σ(position), position in 1..n.
  int sigma_at(int position) const { return sigma_[position - 1]; }
  // σ⁻¹(element).
  int position_of(int element) const { return inverse_[element - 1]; }

  Subset chain_set(int i) const;
  // Largest j with R_j ⊆ s.
  int chain_depth(const Subset& s) const;

  Rational evaluate(const Subset& s) const;
  SetFunction as_function() const;

  // min_i(−c_i); every non-chain set is non-negative.
  Rational minimum() const;
  // R_i for the smallest i attaining the minimum.
  Subset minimizer() const;

 private:
  int n_;
  std::vector<int> sigma_;
  std::vector<int> inverse_;
  std::vector<int> c_;
};

// Value of a non-chain set with |S| = size whose chain depth is `depth`.
Rational chain_formula(int n, int size, int depth);

struct PermutationSolve {
  Rational min_value;
  Subset argmin;
  std::vector<int> recovered_sigma;
  std::size_t queries_used;
};

// Recovers σ from the n−1 queries [n] \ {i}, i ≠ 1, then queries all n+1
// chain sets: exactly 2n queries. Throws InconsistencyError when the answers
// fit no member of the family.
PermutationSolve solve_permutation_family(ValueOracle& oracle);

}  // namespace sfmlab
