#pragma once

#include <vector>

#include "sfmlab/hyperedge_system.hpp"
#include "sfmlab/value_oracle.hpp"
#include "sfmlab/weighted_graph.hpp"

namespace sfmlab::testing {

inline Rational q(long p, long d = 1) { return make_rational(p, d); }

// v = 1, w1 = 2, w1' = 3; edges (v,w1), (v,w1'), (w1,w1').
inline WeightedGraph unit_triangle() { return build_star_matching_graph(3); }

// s = 1, t = 2, a = 3, b = 4 with unit edges (s,a), (s,b), (a,t), (b,t).
// Ground elements: a = 1, b = 2.
inline WeightedGraph parallel_paths() {
  return WeightedGraph(4, CutMode::kSt,
                       {{1, 3, q(1)}, {1, 4, q(1)}, {3, 2, q(1)}, {4, 2, q(1)}}, 1, 2);
}

// u = 1 → v = 2 → w = 3 → u, unit weights.
inline WeightedGraph directed_three_cycle() {
  return WeightedGraph(3, CutMode::kDirected, {{1, 2, q(1)}, {2, 3, q(1)}, {3, 1, q(1)}});
}

inline SetFunction cut_function(const WeightedGraph& g) {
  return [g](const Subset& s) { return g.cut_value(s); };
}

inline ValueOracle cut_oracle(const WeightedGraph& g) { return ValueOracle(g.ground_size(), cut_function(g)); }

inline std::vector<Rational> weights(std::initializer_list<Rational> w) { return std::vector<Rational>(w); }

}  // namespace sfmlab::testing
