#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sfmlab/exact_linalg.hpp"
#include "sfmlab/value_oracle.hpp"
#include "sfmlab/weighted_graph.hpp"

namespace sfmlab {

// Total weight per ordered vertex pair (per unordered pair, keyed (u < v), for
// undirected graphs). Zero totals are omitted.
using PairWeights = std::map<std::pair<int, int>, Rational>;

PairWeights aggregate_weights(const WeightedGraph& g);

// One edge per positive entry, in key order. s/t/st_directed are taken from
// `like`, which also supplies the vertex count and mode.
WeightedGraph graph_from_weights(const WeightedGraph& like, const PairWeights& weights);

// Cut oracle over all N vertices of an undirected graph. Queries every
// singleton and pair (N + C(N,2) queries) and sets
// w(u,v) = (f({u}) + f({v}) − f({u,v})) / 2.
// Throws NotCutFunctionError if any recovered weight is negative.
WeightedGraph learn_undirected(ValueOracle& oracle);

// u₁ → u₂ → … → u_k → u₁ carrying weight t: shifting adds t to every forward
// edge and subtracts t from every reverse edge.
struct WeightedCycle {
  std::vector<int> vertices;
  Rational weight;
};

struct CycleEquivalenceCertificate {
  WeightedGraph learned;
  std::size_t queries_used = 0;
  // Set when N ≤ 12: every cut of `learned` matches the oracle.
  bool verified = false;
  bool agrees_on_all_cuts = false;
  std::optional<Subset> first_disagreement;
  // Cycle shifts taking `learned` to a reference graph, when one is supplied
  // through explain_against().
  std::vector<WeightedCycle> residual;

  void explain_against(const WeightedGraph& reference);
};

// Directed (tail-in, head-out) cut oracle over all N vertices. Learns pair
// sums from the symmetrized f(S) + f(V \ S), out-degrees f({u}) and in-degrees
// f(V \ {u}), then orients each pair sum with an exact max-flow so every
// out-degree matches. Throws NotCutFunctionError when no orientation exists.
CycleEquivalenceCertificate learn_directed_up_to_cycles(ValueOracle& oracle);

// nullopt iff both graphs give the same cut value on every subset.
// Throws InvalidArgumentError on differing vertex counts, modes or terminals.
std::optional<Subset> cut_equivalent(const WeightedGraph& a, const WeightedGraph& b);

// Applies a cycle shift. Throws InvalidArgumentError if a reverse edge would
// go negative or the vertex list is not a simple cycle.
WeightedGraph shift_cycle(const WeightedGraph& g, const WeightedCycle& cycle);

// Decomposes `to − from` into cycle shifts. Throws InvalidArgumentError when
// the difference is not antisymmetric with zero net flow at every vertex.
std::vector<WeightedCycle> cycle_decomposition(const WeightedGraph& from, const WeightedGraph& to);

// s-t cut queries on an undirected graph with k non-terminal vertices, once
// internal edges are known, are linear in the 2k terminal weights ordered
// (w_1, w'_1, …, w_k, w'_k) with w_u = w(s,u), w'_u = w(u,t). A query for S
// has coefficient 1 on w'_u for u ∈ S and on w_u for u ∉ S.
linalg::Vector st_query_coefficients(int k, const Subset& s);

// β = 1 on w_{u*}, w'_{u*} and −1/(k−1) elsewhere: orthogonal to every
// query vector while ⟨e_{u*}, β⟩ = 1.
struct StKernelVector {
  int k;
  int u_star;
  linalg::Vector beta;
};

// nullopt for k < 2: with one non-terminal both terminal weights are pinned
// by f(∅) and f({u}).
std::optional<StKernelVector> st_kernel_vector(int k, int u_star);

struct StKernelScan {
  std::vector<Rational> inner_products;  // indexed by bitmask of S
  bool all_zero = false;
  Rational source_edge_product;  // ⟨e_{u*}, β⟩ for the edge (s, u*)
  Rational sink_edge_product;    // same for (u*, t)
  // ⟨α_S, β'⟩ where β' uses −1/k off the u* coordinates instead.
  Rational minus_one_over_k_product;
};

inline constexpr int kStKernelScanLimit = 20;

StKernelScan scan_st_kernel(const StKernelVector& kernel);

// Two undirected s-t graphs (s = 1, t = 2, non-terminals 3..k+2, a path of
// internal edges) whose terminal weights differ by β/2 along the kernel
// vector. They answer every s-t cut query identically but disagree on (s, u*).
std::pair<WeightedGraph, WeightedGraph> make_st_indistinguishable_pair(int k, int u_star);

}  // namespace sfmlab
