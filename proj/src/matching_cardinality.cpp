// Maximum-cardinality general matching: Edmonds' algorithm with BFS
// alternating trees and blossom contraction through base relabelling.

#include <algorithm>
#include <queue>

#include "mwist/error.hpp"
#include "mwist/matching.hpp"

namespace mwist {

namespace {

class CardinalityBlossom {
 public:
  CardinalityBlossom(int n, std::span<const Edge> edges) : n_(n), adj_(n) {
    for (const auto& e : edges) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::vector<Vertex> solve() {
    match_.assign(n_, -1);
    // greedy start
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1)
        for (int w : adj_[v])
          if (match_[w] == -1) {
            match_[v] = w;
            match_[w] = v;
            break;
          }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int end = find_path(root);
      while (end != -1) {
        int pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> used(n_, 0);
    while (true) {
      a = base_[a];
      used[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (used[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

std::vector<Vertex> max_cardinality_mates(int n, std::span<const Edge> edges) {
  return CardinalityBlossom(n, edges).solve();
}

Matching max_cardinality_matching(const Graph& g, std::span<const Edge> subset) {
  for (const auto& e : subset)
    if (!g.has_edge(e.u, e.v)) throw error("edge subset is not contained in the graph");
  auto mate = max_cardinality_mates(g.n(), subset);
  Matching m;
  for (Vertex v = 0; v < g.n(); ++v)
    if (mate[v] > v) {
      m.edges.push_back({v, mate[v]});
      m.weight += g.weight(v) + g.weight(mate[v]);
    }
  return m;
}

namespace {

struct BruteState {
  const std::vector<Edge>* edges;
  const std::vector<Weight>* w;
  std::vector<char> used;
  std::vector<int> cur, best;
  Weight cur_w = 0, best_w = -1;

  void run(int i) {
    if (i == static_cast<int>(edges->size())) {
      if (cur_w > best_w) {
        best_w = cur_w;
        best = cur;
      }
      return;
    }
    const auto& e = (*edges)[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      cur.push_back(i);
      cur_w += (*w)[i];
      run(i + 1);
      cur_w -= (*w)[i];
      cur.pop_back();
      used[e.u] = used[e.v] = 0;
    }
    run(i + 1);
  }
};

}  // namespace

Matching brute_force_max_weight_matching(const Graph& g, std::span<const Weight> edge_weights,
                                         int max_edges) {
  if (g.m() > max_edges)
    throw budget_exceeded_error("brute-force matching limited to " + std::to_string(max_edges) +
                                " edges, graph has " + std::to_string(g.m()));
  std::vector<Weight> w(edge_weights.begin(), edge_weights.end());
  BruteState st{&g.edges(), &w, std::vector<char>(g.n(), 0), {}, {}, 0, -1};
  st.run(0);
  Matching m;
  for (int i : st.best) m.edges.push_back(g.edges()[i]);
  m.weight = st.best_w;
  return m;
}

int brute_force_max_cardinality(const Graph& g, std::span<const Edge> subset, int max_edges) {
  if (static_cast<int>(subset.size()) > max_edges)
    throw budget_exceeded_error("brute-force matching limited to " + std::to_string(max_edges) +
                                " edges");
  std::vector<Edge> es(subset.begin(), subset.end());
  std::vector<Weight> ones(es.size(), 1);
  BruteState st{&es, &ones, std::vector<char>(g.n(), 0), {}, {}, 0, -1};
  st.run(0);
  return static_cast<int>(st.best_w);
}

}  // namespace mwist
