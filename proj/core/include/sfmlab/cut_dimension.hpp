#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfmlab/exact_linalg.hpp"
#include "sfmlab/hyperedge_system.hpp"

namespace sfmlab {

inline constexpr int kMaxHyperedges = 4096;

// Subsets attaining the minimum value, either over all of 2^[n] or over the
// nontrivial subsets only (∅ and [n] excluded). Sorted by bitmask.
struct MinimizerFamily {
  std::vector<Subset> sets;
  Rational min_value;
  bool nontrivial = false;
  // Smallest in-scope value strictly above min_value, if any.
  std::optional<Rational> next_value;

  bool contains(const Subset& s) const;
};

bool in_scope(const Subset& s, bool nontrivial);

MinimizerFamily enumerate_minimizers(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial);

// coords[i] = 1 iff hyperedge i is active for S and carries positive weight.
struct IndicatorVector {
  std::vector<std::uint8_t> coords;

  linalg::Vector as_rational() const;
  friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;
};

IndicatorVector indicator_vector(const HyperedgeSystem& sys, const WeightVector& w, const Subset& s);

struct CutDimension {
  int d = 0;
  // Minimizers whose indicator vectors were accepted greedily in sorted order.
  std::vector<Subset> basis;
  MinimizerFamily minimizers;
};

// Rank over Q of {v^S : S a (nontrivial, if flagged) minimizer}.
CutDimension cut_dimension(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial);

// S_i = ∩{S ∈ M_f : i ∈ S} (null when no minimizer contains i), plus ∅ if it
// is a minimizer.
struct BaseSets {
  std::vector<std::optional<Subset>> per_element;  // index i − 1
  bool include_empty = false;

  // Distinct base sets, sorted.
  std::vector<Subset> sets(int n) const;
};

BaseSets compute_base_sets(const MinimizerFamily& family, int n);

enum class SpanBoundFailure {
  kNotClosed,           // S ∪ T or S ∩ T of two minimizers is not a minimizer
  kNotUnionOfBaseSets,  // S ≠ ∪_{i∈S} S_i
  kModularIdentity,     // v^{S∪T} + v^{S∩T} ≠ v^S + v^T
  kNotInSpan,           // v^S outside span of base-set vectors
  kTooManyBaseSets,     // |B| > n + 1
};

const char* to_string(SpanBoundFailure f);

struct SpanBoundReport {
  bool pass = true;
  std::optional<SpanBoundFailure> failure;
  // The offending set, plus the partner for pairwise checks.
  std::optional<Subset> counterexample;
  std::optional<Subset> partner;
  int dimension = 0;
  int base_set_count = 0;
  int n = 0;
  std::size_t minimizer_count = 0;
  std::string detail;
};

inline constexpr int kSpanBoundLimit = 16;

// Runs, in order: closure of M_f under ∪ and ∩; S = ∪_{i∈S} S_i; the identity
// v^{S∪T} + v^{S∩T} = v^S + v^T on every minimizer pair; membership of every
// v^S in the span of the base-set vectors. On success dimension ≤ |B| ≤ n + 1.
// `nontrivial` exists to demonstrate where the argument breaks.
SpanBoundReport verify_span_bound(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial = false);

}  // namespace sfmlab
