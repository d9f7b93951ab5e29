#include "mwist/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "mwist/error.hpp"
#include "mwist/union_find.hpp"

namespace mwist {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) e = make_edge(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::insert(Edge e) {
  e = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

bool EdgeSet::erase(Edge e) {
  e = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return false;
  edges_.erase(it);
  return true;
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
}

Graph::Graph(std::vector<Weight> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const int n = static_cast<int>(weights_.size());
  for (Vertex v = 0; v < n; ++v)
    if (weights_[v] < 0)
      throw invalid_graph_error("negative weight on vertex " + std::to_string(v));
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw invalid_graph_error("edge endpoint out of range: " + std::to_string(e.u) +
                                " " + std::to_string(e.v));
    if (e.u == e.v) throw invalid_graph_error("self-loop on vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw invalid_graph_error("duplicate edge " + std::to_string(edges_[i].u) + " " +
                                std::to_string(edges_[i].v));

  offset_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++offset_[e.u + 1];
    ++offset_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) offset_[v + 1] += offset_[v];
  adj_.resize(2 * edges_.size());
  adj_edge_.resize(2 * edges_.size());
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (int i = 0; i < m(); ++i) {
    const auto& e = edges_[i];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = i;
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = i;
  }
  // Edges are sorted by (u, v), so for each vertex the neighbours below it
  // arrive in order, then those above it. Sort pairs to be safe.
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<Vertex, int>> tmp;
    for (int k = offset_[v]; k < offset_[v + 1]; ++k) tmp.emplace_back(adj_[k], adj_edge_[k]);
    std::sort(tmp.begin(), tmp.end());
    for (int k = offset_[v]; k < offset_[v + 1]; ++k) {
      adj_[k] = tmp[k - offset_[v]].first;
      adj_edge_[k] = tmp[k - offset_[v]].second;
    }
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
}

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n() || b >= n() || a == b) return -1;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return -1;
  return adj_edge_[offset_[a] + static_cast<int>(it - nb.begin())];
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

Weight Graph::total_weight() const {
  Weight s = 0;
  for (auto w : weights_) s += w;
  return s;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n();
}

bool is_spanning_tree(const Graph& g, std::span<const Edge> edges) {
  if (static_cast<int>(edges.size()) != std::max(0, g.n() - 1)) return false;
  UnionFind uf(g.n());
  for (const auto& e : edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<int> tree_degrees(int n, std::span<const Edge> edges) {
  std::vector<int> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

Weight internal_weight(const Graph& g, std::span<const Edge> tree_edges) {
  if (!is_spanning_tree(g, tree_edges)) throw invalid_tree_error("not a spanning tree of the graph");
  auto deg = tree_degrees(g.n(), tree_edges);
  Weight s = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    if (deg[v] >= 2) s += g.weight(v);
  return s;
}

Weight internal_weight(const Graph& g, const SpanningTree& t) { return internal_weight(g, t.edges); }

std::vector<Weight> lift_edge_weights(const Graph& g) {
  std::vector<Weight> w;
  w.reserve(g.m());
  for (const auto& e : g.edges()) w.push_back(g.weight(e.u) + g.weight(e.v));
  return w;
}

ClawCheck check_claw_free(const Graph& g) {
  std::vector<char> local;
  for (Vertex c = 0; c < g.n(); ++c) {
    auto nb = g.neighbors(c);
    const int d = static_cast<int>(nb.size());
    if (d < 3) continue;
    local.assign(static_cast<std::size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (g.has_edge(nb[i], nb[j])) local[i * d + j] = local[j * d + i] = 1;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (local[i * d + j]) continue;
        for (int k = j + 1; k < d; ++k)
          if (!local[i * d + k] && !local[j * d + k])
            return {false, Claw{c, {nb[i], nb[j], nb[k]}}};
      }
  }
  return {};
}

NormalizedGraph normalize_leaves(const Graph& g) {
  auto w = g.weights();
  Weight removed = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) {
      removed += w[v];
      w[v] = 0;
    }
  return {Graph(std::move(w), g.edges()), removed};
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.n(), -1);
  std::vector<Weight> w;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<int>(i);
    w.push_back(g.weight(vertices[i]));
  }
  std::vector<Edge> es;
  for (Vertex v : vertices)
    for (Vertex x : g.neighbors(v))
      if (v < x && local[x] >= 0) es.push_back(make_edge(local[v], local[x]));
  return Graph(std::move(w), std::move(es));
}

}  // namespace mwist
