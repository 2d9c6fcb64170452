#include "sfmlab/weighted_graph.hpp"

#include "sfmlab/errors.hpp"

namespace sfmlab {

const char* to_string(CutMode mode) {
  switch (mode) {
    case CutMode::kUndirected: return "undirected";
    case CutMode::kDirected: return "directed";
    case CutMode::kSt: return "st";
  }
  return "?";
}

CutMode parse_cut_mode(const std::string& text) {
  if (text == "undirected") return CutMode::kUndirected;
  if (text == "directed") return CutMode::kDirected;
  if (text == "st") return CutMode::kSt;
  throw InvalidArgumentError("unknown cut mode \"" + text + "\"");
}

WeightedGraph::WeightedGraph(int num_vertices, CutMode mode, std::vector<Edge> edges, std::optional<int> s,
                             std::optional<int> t, bool st_directed)
    : num_vertices_(num_vertices),
      mode_(mode),
      edges_(std::move(edges)),
      s_(s),
      t_(t),
      st_directed_(st_directed) {
  if (num_vertices < 1) throw InvalidArgumentError("graph needs at least one vertex");
  auto in_range = [&](int v) { return v >= 1 && v <= num_vertices; };
  for (const auto& e : edges_) {
    if (!in_range(e.tail) || !in_range(e.head)) throw InvalidArgumentError("edge endpoint out of range");
    if (e.tail == e.head) throw InvalidArgumentError("self-loop on vertex " + std::to_string(e.tail));
    if (e.weight < 0) throw InvalidArgumentError("negative edge weight");
  }
  element_of_.assign(static_cast<std::size_t>(num_vertices), 0);
  if (mode == CutMode::kSt) {
    if (!s || !t) throw InvalidArgumentError("s-t mode requires both s and t");
    if (!in_range(*s) || !in_range(*t) || *s == *t) throw InvalidArgumentError("s and t must be distinct vertices");
  } else {
    s_.reset();
    t_.reset();
    st_directed_ = false;
  }
  for (int v = 1; v <= num_vertices; ++v) {
    if (mode == CutMode::kSt && (v == *s_ || v == *t_)) continue;
    ground_vertices_.push_back(v);
    element_of_[v - 1] = static_cast<int>(ground_vertices_.size());
  }
  if (ground_vertices_.empty() || ground_size() > kMaxGroundSize) {
    throw InvalidArgumentError("graph ground set must have between 1 and " + std::to_string(kMaxGroundSize) +
                               " elements");
  }
}

bool WeightedGraph::on_source_side(const Subset& s, int vertex) const {
  if (mode_ == CutMode::kSt) {
    if (vertex == *s_) return true;
    if (vertex == *t_) return false;
  }
  return s.contains(element_of_[vertex - 1]);
}

bool WeightedGraph::edge_active(const Subset& s, const Edge& e) const {
  const bool tail_in = on_source_side(s, e.tail);
  const bool head_in = on_source_side(s, e.head);
  if (edges_directed()) return tail_in && !head_in;
  return tail_in != head_in;
}

Rational WeightedGraph::cut_value(const Subset& s) const {
  if (s.ground_size() != ground_size()) throw SizeMismatchError("cut query over wrong ground set");
  Rational total = 0;
  for (const auto& e : edges_) {
    if (edge_active(s, e)) total += e.weight;
  }
  return total;
}

WeightedGraph WeightedGraph::with_edges(std::vector<Edge> edges) const {
  return WeightedGraph(num_vertices_, mode_, std::move(edges), s_, t_, st_directed_);
}

WeightedGraph build_star_matching_graph(int n) {
  if (n < 3) throw InvalidArgumentError("star-matching graph needs n >= 3");
  const int odd = (n % 2 == 1) ? n : n - 1;
  const int pairs = (odd - 1) / 2;
  std::vector<Edge> edges;
  for (int i = 1; i <= pairs; ++i) {
    const int w = 2 * i;
    const int w_prime = 2 * i + 1;
    edges.push_back({1, w, Rational(1)});
    edges.push_back({1, w_prime, Rational(1)});
    edges.push_back({w, w_prime, Rational(1)});
  }
  if (n % 2 == 0) edges.push_back({1, n, Rational(2)});
  return WeightedGraph(n, CutMode::kUndirected, std::move(edges));
}

int star_matching_expected_dimension(int n) {
  if (n < 3) throw InvalidArgumentError("star-matching graph needs n >= 3");
  return n % 2 == 1 ? 3 * (n - 1) / 2 : 3 * n / 2 - 2;
}

}  // namespace sfmlab
