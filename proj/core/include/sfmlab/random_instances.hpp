#pragma once

#include <cstdint>
#include <random>

#include "sfmlab/permutation_family.hpp"
#include "sfmlab/weighted_graph.hpp"

namespace sfmlab {

using Rng = std::mt19937_64;

// p/q with p in [1, 12] and q in [1, 6], in lowest terms.
Rational random_positive_rational(Rng& rng);

// Uniform σ and uniform c ∈ {0, 1}^(n+1).
PermutationInstance random_permutation_instance(int n, Rng& rng);

struct RandomGraphOptions {
  // Probability that each candidate edge is present.
  double density = 0.5;
  // s-t mode only: whether edges are directed.
  bool st_directed = false;
};

// Random graph on N vertices with positive rational weights. Candidate edges
// are unordered pairs (undirected), ordered pairs (directed), and for s-t
// mode every pair except {s, t} with s = 1, t = 2. At least one edge is
// always present.
WeightedGraph random_graph(int num_vertices, CutMode mode, Rng& rng, const RandomGraphOptions& options = {});

}  // namespace sfmlab
