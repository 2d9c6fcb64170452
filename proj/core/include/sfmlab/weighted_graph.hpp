#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfmlab/rational.hpp"
#include "sfmlab/subset.hpp"

namespace sfmlab {

enum class CutMode {
  kUndirected,  // global cuts, edge active iff exactly one endpoint in S
  kDirected,    // global cuts, edge active iff tail in S and head outside
  kSt,          // s-t cuts over S ∪ {s}; edges directed or not per `st_directed`
};

const char* to_string(CutMode mode);
CutMode parse_cut_mode(const std::string& text);

struct Edge {
  int tail;
  int head;
  Rational weight;
};

// Vertices are 1..N. Edge order is significant: edge k is hyperedge k of the
// derived cut system. Parallel edges stay distinct.
class WeightedGraph {
 public:
  // Throws InvalidArgumentError on self-loops, out-of-range endpoints,
  // negative weights, or a missing / coincident s, t in s-t mode.
  WeightedGraph(int num_vertices, CutMode mode, std::vector<Edge> edges, std::optional<int> s = std::nullopt,
                std::optional<int> t = std::nullopt, bool st_directed = false);

  int num_vertices() const { return num_vertices_; }
  CutMode mode() const { return mode_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<int> source() const { return s_; }
  std::optional<int> sink() const { return t_; }
  bool st_directed() const { return st_directed_; }
  bool edges_directed() const { return mode_ == CutMode::kDirected || (mode_ == CutMode::kSt && st_directed_); }

  // Ground-set size: N in the global modes, N − 2 in s-t mode.
  int ground_size() const { return static_cast<int>(ground_vertices_.size()); }
  // Vertex represented by ground element k (1-based).
  int vertex_of(int element) const { return ground_vertices_[element - 1]; }
  // Ground element of a vertex, or 0 for a terminal.
  int element_of(int vertex) const { return element_of_[vertex - 1]; }

  // Whether a vertex lies on the source side of the cut induced by s
  // (S itself globally, S ∪ {s} in s-t mode).
  bool on_source_side(const Subset& s, int vertex) const;
  bool edge_active(const Subset& s, const Edge& e) const;

  Rational cut_value(const Subset& s) const;

  WeightedGraph with_edges(std::vector<Edge> edges) const;

 private:
  int num_vertices_;
  CutMode mode_;
  std::vector<Edge> edges_;
  std::optional<int> s_;
  std::optional<int> t_;
  bool st_directed_;
  std::vector<int> ground_vertices_;
  std::vector<int> element_of_;
};

// n odd = 2a + 1: a hub v joined to every other vertex, plus the matching
// w_i – w'_i. Vertex 1 is v, w_i is 2i, w'_i is 2i + 1; edges are listed per
// i as (v, w_i), (v, w'_i), (w_i, w'_i). n even: the (n−1)-vertex graph plus
// vertex n joined to v by an edge of weight 2. Requires n ≥ 3.
WeightedGraph build_star_matching_graph(int n);

// Nontrivial cut dimension of the construction: 3(n−1)/2 for odd n,
// 3n/2 − 2 for even n.
int star_matching_expected_dimension(int n);

}  // namespace sfmlab
