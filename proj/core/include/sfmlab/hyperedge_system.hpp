#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sfmlab/rational.hpp"
#include "sfmlab/subset.hpp"
#include "sfmlab/value_oracle.hpp"
#include "sfmlab/weighted_graph.hpp"

namespace sfmlab {

// The active-set map h(·) over m hyperedges (0-based indices). Either a rule
// evaluated on demand or an explicit table with one entry per subset.
class HyperedgeSystem {
 public:
  // Appends the sorted active indices for s to `out` (which arrives empty).
  using Rule = std::function<void(const Subset&, std::vector<int>&)>;

  static HyperedgeSystem from_rule(int n, int m, Rule rule);
  // table[mask] lists the active hyperedges of Subset(n, mask); 2^n entries.
  static HyperedgeSystem from_table(int n, int m, std::vector<std::vector<int>> table);

  int n() const { return n_; }
  int m() const { return m_; }
  bool is_extensional() const { return table_ != nullptr; }

  std::vector<int> active(const Subset& s) const;

  // Extensional copy with every entry evaluated (n ≤ 16).
  HyperedgeSystem materialized() const;

  // Same system with hyperedge k renamed to permutation[k].
  HyperedgeSystem relabeled(const std::vector<int>& permutation) const;

 private:
  HyperedgeSystem(int n, int m, Rule rule, std::shared_ptr<const std::vector<std::vector<int>>> table)
      : n_(n), m_(m), rule_(std::move(rule)), table_(std::move(table)) {}

  int n_;
  int m_;
  Rule rule_;
  std::shared_ptr<const std::vector<std::vector<int>>> table_;
};

// Non-negative weights, one per hyperedge.
class WeightVector {
 public:
  WeightVector() = default;
  // Throws InvalidArgumentError if any entry is negative.
  explicit WeightVector(std::vector<Rational> w);

  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Rational>& values() const { return w_; }
  Rational total() const;
  bool positive(std::size_t i) const { return sgn(w_[i]) > 0; }

 private:
  std::vector<Rational> w_;
};

// f(S) = Σ_{i ∈ h(S)} w_i. Throws SizeMismatchError when |w| ≠ m.
Rational eval_weight_based(const HyperedgeSystem& sys, const WeightVector& w, const Subset& s);
SetFunction weight_based_function(const HyperedgeSystem& sys, const WeightVector& w);

struct WeightConditionViolation {
  Subset s;
  Subset t;
  int hyperedge;
};

inline constexpr int kWeightConditionLimit = 12;

// Checks h(S ∩ T) ⊎ h(S ∪ T) ⊆ h(S) ⊎ h(T) as multisets for every pair; the
// first failing pair in bitmask order is returned along with a witness index.
std::optional<WeightConditionViolation> check_weight_based_condition(const HyperedgeSystem& sys);

// Hyperedges are the graph's edges in input order, with the activity rule of
// the graph's cut mode.
std::pair<HyperedgeSystem, WeightVector> cut_system_from_graph(const WeightedGraph& g);

}  // namespace sfmlab
