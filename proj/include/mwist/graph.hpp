#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mwist {

using Vertex = std::int32_t;
using Weight = std::int64_t;

inline constexpr Vertex no_vertex = -1;

// Unordered pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sorted, duplicate-free set of canonical edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  bool insert(Edge e);
  bool erase(Edge e);
  bool contains(Edge e) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

class Graph {
 public:
  Graph() = default;
  // Throws invalid_graph_error on self-loops, duplicate edges, bad endpoints
  // or negative weights.
  Graph(std::vector<Weight> weights, std::vector<Edge> edges);

  int n() const { return static_cast<int>(weights_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  Weight weight(Vertex v) const { return weights_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }
  // Canonical edges in ascending order; an edge's position is its index.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;
  // -1 when absent.
  int edge_index(Vertex a, Vertex b) const;
  Weight total_weight() const;

 private:
  std::vector<Weight> weights_;
  std::vector<Edge> edges_;
  std::vector<int> offset_;
  std::vector<Vertex> adj_;
  std::vector<int> adj_edge_;
};

struct SpanningTree {
  std::vector<Edge> edges;
};

bool is_connected(const Graph& g);
bool is_spanning_tree(const Graph& g, std::span<const Edge> edges);
std::vector<int> tree_degrees(int n, std::span<const Edge> edges);

// Sum of weights of vertices of degree >= 2 in t. Throws invalid_tree_error if
// t is not a spanning tree of g.
Weight internal_weight(const Graph& g, const SpanningTree& t);
Weight internal_weight(const Graph& g, std::span<const Edge> tree_edges);

// w(u) + w(v) for every edge, aligned with g.edges().
std::vector<Weight> lift_edge_weights(const Graph& g);

struct Claw {
  Vertex center;
  std::array<Vertex, 3> leaves;
};

struct ClawCheck {
  bool claw_free = true;
  std::optional<Claw> witness;
};

ClawCheck check_claw_free(const Graph& g);
inline bool is_claw_free(const Graph& g) { return check_claw_free(g).claw_free; }

// Degree-1 vertices get weight 0. No spanning tree can use them as internal
// vertices, so w(T) is unchanged for every T.
struct NormalizedGraph {
  Graph graph;
  Weight removed_weight = 0;
};

NormalizedGraph normalize_leaves(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace mwist
