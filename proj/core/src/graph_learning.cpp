#include "sfmlab/graph_learning.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sfmlab/errors.hpp"

namespace sfmlab {

PairWeights aggregate_weights(const WeightedGraph& g) {
  PairWeights out;
  for (const auto& e : g.edges()) {
    if (sgn(e.weight) == 0) continue;
    std::pair<int, int> key{e.tail, e.head};
    if (!g.edges_directed() && key.first > key.second) std::swap(key.first, key.second);
    out[key] += e.weight;
  }
  return out;
}

WeightedGraph graph_from_weights(const WeightedGraph& like, const PairWeights& weights) {
  std::vector<Edge> edges;
  for (const auto& [key, w] : weights) {
    if (w < 0) throw InvalidArgumentError("negative aggregated weight");
    if (sgn(w) > 0) edges.push_back({key.first, key.second, w});
  }
  return like.with_edges(std::move(edges));
}

WeightedGraph learn_undirected(ValueOracle& oracle) {
  const int n = oracle.ground_size();
  std::vector<Rational> single(static_cast<std::size_t>(n + 1));
  for (int u = 1; u <= n; ++u) single[u] = oracle.evaluate(Subset::singleton(n, u));
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      Rational both = oracle.evaluate(Subset::of(n, {u, v}));
      Rational w = (single[u] + single[v] - both) / 2;
      if (w < 0) {
        throw NotCutFunctionError("recovered negative weight " + to_string(w) + " on pair (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
      }
      if (sgn(w) > 0) edges.push_back({u, v, std::move(w)});
    }
  }
  return WeightedGraph(n, CutMode::kUndirected, std::move(edges));
}

namespace {

// Edmonds–Karp over exact rational capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adjacency_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, Rational capacity) {
    adjacency_[from].push_back(arcs_.size());
    arcs_.push_back({to, std::move(capacity)});
    adjacency_[to].push_back(arcs_.size());
    arcs_.push_back({from, Rational(0)});
    return arcs_.size() - 2;
  }

  Rational run(std::size_t source, std::size_t sink) {
    Rational total = 0;
    while (true) {
      std::vector<std::optional<std::size_t>> via(adjacency_.size());
      std::deque<std::size_t> queue{source};
      std::vector<bool> seen(adjacency_.size(), false);
      seen[source] = true;
      while (!queue.empty() && !seen[sink]) {
        const std::size_t at = queue.front();
        queue.pop_front();
        for (std::size_t a : adjacency_[at]) {
          if (sgn(arcs_[a].residual) > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = true;
            via[arcs_[a].to] = a;
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (!seen[sink]) return total;
      Rational push = -1;
      for (std::size_t v = sink; v != source; v = arcs_[*via[v] ^ 1].to) {
        const Rational& r = arcs_[*via[v]].residual;
        if (push < 0 || r < push) push = r;
      }
      for (std::size_t v = sink; v != source; v = arcs_[*via[v] ^ 1].to) {
        arcs_[*via[v]].residual -= push;
        arcs_[*via[v] ^ 1].residual += push;
      }
      total += push;
    }
  }

  // Flow on a forward arc = residual of its paired reverse arc.
  const Rational& flow(std::size_t arc) const { return arcs_[arc ^ 1].residual; }

 private:
  struct Arc {
    std::size_t to;
    Rational residual;
  };
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Arc> arcs_;
};

}  // namespace

CycleEquivalenceCertificate learn_directed_up_to_cycles(ValueOracle& oracle) {
  const int n = oracle.ground_size();
  const std::size_t start = oracle.query_count();
  const Subset all = Subset::full(n);
  auto symmetrized = [&](const Subset& s) -> Rational {
    return oracle.evaluate(s) + oracle.evaluate(s.complement());
  };

  std::vector<Rational> sym_single(static_cast<std::size_t>(n + 1));
  std::vector<Rational> out_degree(static_cast<std::size_t>(n + 1));
  std::vector<Rational> in_degree(static_cast<std::size_t>(n + 1));
  for (int u = 1; u <= n; ++u) {
    out_degree[u] = oracle.evaluate(Subset::singleton(n, u));
    in_degree[u] = oracle.evaluate(all.without(u));
    sym_single[u] = out_degree[u] + in_degree[u];
  }

  std::vector<std::pair<int, int>> pairs;
  std::vector<Rational> pair_sum;
  std::vector<Rational> incident(static_cast<std::size_t>(n + 1), Rational(0));
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      Rational p = (sym_single[u] + sym_single[v] - symmetrized(Subset::of(n, {u, v}))) / 2;
      if (p < 0) {
        throw NotCutFunctionError("negative pair sum between " + std::to_string(u) + " and " + std::to_string(v));
      }
      incident[u] += p;
      incident[v] += p;
      if (sgn(p) > 0) {
        pairs.emplace_back(u, v);
        pair_sum.push_back(std::move(p));
      }
    }
  }
  Rational total_out = 0;
  for (int u = 1; u <= n; ++u) {
    if (incident[u] != out_degree[u] + in_degree[u]) {
      throw NotCutFunctionError("degrees of vertex " + std::to_string(u) + " disagree with its pair sums");
    }
    total_out += out_degree[u];
  }

  // source → pair {u,v} (cap p) → u or v (cap p) → sink (cap out-degree).
  // Flow reaching u from {u,v} is the weight of u → v.
  const std::size_t source = 0;
  const std::size_t first_pair = 1;
  const std::size_t first_vertex = first_pair + pairs.size();
  const std::size_t sink = first_vertex + static_cast<std::size_t>(n);
  MaxFlow flow(sink + 1);
  std::vector<std::pair<std::size_t, std::size_t>> pair_arcs;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    flow.add_arc(source, first_pair + k, pair_sum[k]);
    const std::size_t to_u = flow.add_arc(first_pair + k, first_vertex + pairs[k].first - 1, pair_sum[k]);
    const std::size_t to_v = flow.add_arc(first_pair + k, first_vertex + pairs[k].second - 1, pair_sum[k]);
    pair_arcs.emplace_back(to_u, to_v);
  }
  for (int u = 1; u <= n; ++u) flow.add_arc(first_vertex + u - 1, sink, out_degree[u]);
  if (flow.run(source, sink) != total_out) {
    throw NotCutFunctionError("no orientation of the pair sums matches the out-degrees");
  }

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [u, v] = pairs[k];
    const Rational& forward = flow.flow(pair_arcs[k].first);
    const Rational& backward = flow.flow(pair_arcs[k].second);
    if (sgn(forward) > 0) edges.push_back({u, v, forward});
    if (sgn(backward) > 0) edges.push_back({v, u, backward});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair{a.tail, a.head} < std::pair{b.tail, b.head}; });

  CycleEquivalenceCertificate cert{WeightedGraph(n, CutMode::kDirected, std::move(edges)), 0, false, false, {}, {}};
  cert.queries_used = oracle.query_count() - start;
  if (n <= 12) {
    cert.verified = true;
    cert.agrees_on_all_cuts = true;
    for_each_subset(n, [&](const Subset& s) {
      if (!cert.agrees_on_all_cuts) return;
      if (cert.learned.cut_value(s) != oracle.underlying()(s)) {
        cert.agrees_on_all_cuts = false;
        cert.first_disagreement = s;
      }
    });
  }
  return cert;
}

void CycleEquivalenceCertificate::explain_against(const WeightedGraph& reference) {
  residual = cycle_decomposition(learned, reference);
}

std::optional<Subset> cut_equivalent(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.num_vertices() != b.num_vertices()) throw InvalidArgumentError("cut_equivalent: vertex counts differ");
  if (a.mode() != b.mode() || a.source() != b.source() || a.sink() != b.sink() ||
      a.edges_directed() != b.edges_directed()) {
    throw InvalidArgumentError("cut_equivalent: graphs use different cut modes or terminals");
  }
  require_enumerable(a.ground_size(), 12, "cut_equivalent");
  std::optional<Subset> diff;
  for_each_subset(a.ground_size(), [&](const Subset& s) {
    if (!diff && a.cut_value(s) != b.cut_value(s)) diff = s;
  });
  return diff;
}

WeightedGraph shift_cycle(const WeightedGraph& g, const WeightedCycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 2) throw InvalidArgumentError("a cycle needs at least two vertices");
  if (std::set<int>(vs.begin(), vs.end()).size() != vs.size()) {
    throw InvalidArgumentError("cycle repeats a vertex");
  }
  if (!g.edges_directed()) throw InvalidArgumentError("cycle shifts apply to directed graphs");
  PairWeights w = aggregate_weights(g);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int u = vs[i];
    const int v = vs[(i + 1) % vs.size()];
    w[{u, v}] += cycle.weight;
    w[{v, u}] -= cycle.weight;
    if (w[{v, u}] < 0) throw InvalidArgumentError("cycle shift drives an edge negative");
  }
  return graph_from_weights(g, w);
}

std::vector<WeightedCycle> cycle_decomposition(const WeightedGraph& from, const WeightedGraph& to) {
  if (from.num_vertices() != to.num_vertices() || !from.edges_directed() || !to.edges_directed()) {
    throw InvalidArgumentError("cycle decomposition needs two directed graphs on the same vertices");
  }
  const int n = from.num_vertices();
  PairWeights a = aggregate_weights(from);
  PairWeights b = aggregate_weights(to);

  // Net change d(u,v) = Δw(u,v) − Δw(v,u); a cycle shift changes each pair by ±2t.
  PairWeights surplus;
  std::vector<Rational> balance(static_cast<std::size_t>(n + 1), Rational(0));
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      auto get = [](const PairWeights& m, int x, int y) {
        auto it = m.find({x, y});
        return it == m.end() ? Rational(0) : it->second;
      };
      Rational fwd = get(b, u, v) - get(a, u, v);
      Rational bwd = get(b, v, u) - get(a, v, u);
      if (fwd + bwd != 0) throw InvalidArgumentError("pair sums differ; graphs are not cycle-equivalent");
      if (sgn(fwd) > 0) surplus[{u, v}] = fwd;
      if (sgn(fwd) < 0) surplus[{v, u}] = -fwd;
      balance[u] += fwd;
      balance[v] -= fwd;
    }
  }
  for (int u = 1; u <= n; ++u) {
    if (sgn(balance[u]) != 0) throw InvalidArgumentError("out-degrees differ; graphs are not cycle-equivalent");
  }

  std::vector<WeightedCycle> cycles;
  while (!surplus.empty()) {
    // Walk positive-surplus arcs until a vertex repeats; zero net flow
    // guarantees every vertex reached has an outgoing arc.
    std::vector<int> walk{surplus.begin()->first.first};
    std::map<int, std::size_t> position{{walk.front(), 0}};
    while (true) {
      const int at = walk.back();
      auto it = surplus.lower_bound({at, 0});
      if (it == surplus.end() || it->first.first != at) {
        throw InvalidArgumentError("surplus is not a circulation");
      }
      const int next = it->first.second;
      if (auto seen = position.find(next); seen != position.end()) {
        walk.erase(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(seen->second));
        break;
      }
      position[next] = walk.size();
      walk.push_back(next);
    }
    Rational t = -1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Rational& s = surplus.at({walk[i], walk[(i + 1) % walk.size()]});
      if (t < 0 || s < t) t = s;
    }
    for (std::size_t i = 0; i < walk.size(); ++i) {
      auto key = std::pair{walk[i], walk[(i + 1) % walk.size()]};
      surplus[key] -= t;
      if (sgn(surplus[key]) == 0) surplus.erase(key);
    }
    cycles.push_back({walk, t});
  }
  return cycles;
}

linalg::Vector st_query_coefficients(int k, const Subset& s) {
  if (s.ground_size() != k) throw SizeMismatchError("query over wrong number of non-terminals");
  linalg::Vector alpha(static_cast<std::size_t>(2 * k), Rational(0));
  for (int u = 1; u <= k; ++u) alpha[2 * (u - 1) + (s.contains(u) ? 1 : 0)] = 1;
  return alpha;
}

std::optional<StKernelVector> st_kernel_vector(int k, int u_star) {
  if (k < 2) return std::nullopt;
  if (u_star < 1 || u_star > k) throw InvalidArgumentError("u* must be a non-terminal index in [1, k]");
  linalg::Vector beta(static_cast<std::size_t>(2 * k), Rational(-1, k - 1));
  beta[2 * (u_star - 1)] = 1;
  beta[2 * (u_star - 1) + 1] = 1;
  for (auto& b : beta) b.canonicalize();
  return StKernelVector{k, u_star, std::move(beta)};
}

StKernelScan scan_st_kernel(const StKernelVector& kernel) {
  const int k = kernel.k;
  require_enumerable(k, kStKernelScanLimit, "scan_st_kernel");
  StKernelScan scan;
  scan.all_zero = true;
  linalg::Vector alt = kernel.beta;
  for (std::size_t i = 0; i < alt.size(); ++i) {
    if (i / 2 != static_cast<std::size_t>(kernel.u_star - 1)) alt[i] = Rational(-1, k);
  }
  for (auto& x : alt) x.canonicalize();
  bool first = true;
  for_each_subset(k, [&](const Subset& s) {
    const auto alpha = st_query_coefficients(k, s);
    Rational p = linalg::dot(alpha, kernel.beta);
    if (sgn(p) != 0) scan.all_zero = false;
    if (first) {
      scan.minus_one_over_k_product = linalg::dot(alpha, alt);
      first = false;
    }
    scan.inner_products.push_back(std::move(p));
  });
  scan.source_edge_product = kernel.beta[2 * (kernel.u_star - 1)];
  scan.sink_edge_product = kernel.beta[2 * (kernel.u_star - 1) + 1];
  return scan;
}

std::pair<WeightedGraph, WeightedGraph> make_st_indistinguishable_pair(int k, int u_star) {
  auto kernel = st_kernel_vector(k, u_star);
  if (!kernel) throw InvalidArgumentError("indistinguishable pair needs k >= 2");
  const int s = 1;
  const int t = 2;
  auto vertex = [](int u) { return u + 2; };
  std::vector<Edge> base;
  std::vector<Edge> moved;
  for (int u = 1; u <= k; ++u) {
    base.push_back({s, vertex(u), Rational(1)});
    base.push_back({vertex(u), t, Rational(1)});
    moved.push_back({s, vertex(u), Rational(1) + kernel->beta[2 * (u - 1)] / 2});
    moved.push_back({vertex(u), t, Rational(1) + kernel->beta[2 * (u - 1) + 1] / 2});
  }
  for (int u = 1; u < k; ++u) {
    base.push_back({vertex(u), vertex(u + 1), Rational(u + 1)});
    moved.push_back({vertex(u), vertex(u + 1), Rational(u + 1)});
  }
  return {WeightedGraph(k + 2, CutMode::kSt, std::move(base), s, t),
          WeightedGraph(k + 2, CutMode::kSt, std::move(moved), s, t)};
}

}  // namespace sfmlab
