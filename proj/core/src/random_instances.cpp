#include "sfmlab/random_instances.hpp"

#include <algorithm>
#include <numeric>

#include "sfmlab/errors.hpp"

namespace sfmlab {

Rational random_positive_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 12);
  std::uniform_int_distribution<int> den(1, 6);
  const int p = num(rng);
  return make_rational(p, den(rng));
}

PermutationInstance random_permutation_instance(int n, Rng& rng) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> c(static_cast<std::size_t>(n + 1));
  for (auto& ci : c) ci = coin(rng) ? 1 : 0;
  return PermutationInstance(n, std::move(sigma), std::move(c));
}

WeightedGraph random_graph(int num_vertices, CutMode mode, Rng& rng, const RandomGraphOptions& options) {
  const int min_vertices = mode == CutMode::kSt ? 3 : 2;
  if (num_vertices < min_vertices) throw InvalidArgumentError("random_graph: too few vertices for the mode");
  const bool ordered = mode == CutMode::kDirected || (mode == CutMode::kSt && options.st_directed);
  std::vector<std::pair<int, int>> candidates;
  for (int u = 1; u <= num_vertices; ++u) {
    for (int v = 1; v <= num_vertices; ++v) {
      if (u == v || (!ordered && v < u)) continue;
      if (mode == CutMode::kSt && std::min(u, v) == 1 && std::max(u, v) == 2) continue;
      candidates.emplace_back(u, v);
    }
  }
  std::bernoulli_distribution keep(options.density);
  std::vector<Edge> edges;
  for (const auto& [u, v] : candidates) {
    if (keep(rng)) edges.push_back({u, v, random_positive_rational(rng)});
  }
  if (edges.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const auto [u, v] = candidates[pick(rng)];
    edges.push_back({u, v, random_positive_rational(rng)});
  }
  if (mode == CutMode::kSt) return WeightedGraph(num_vertices, mode, std::move(edges), 1, 2, options.st_directed);
  return WeightedGraph(num_vertices, mode, std::move(edges));
}

}  // namespace sfmlab
