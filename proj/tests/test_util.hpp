#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mwist/graph.hpp"
#include "mwist/union_find.hpp"

namespace mwist::testing {

inline Graph path_graph(std::vector<Weight> w) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) es.push_back({i, i + 1});
  return Graph(std::move(w), std::move(es));
}

inline Graph cycle_graph(std::vector<Weight> w) {
  const int n = static_cast<int>(w.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  return Graph(std::move(w), std::move(es));
}

inline Graph complete_graph(std::vector<Weight> w) {
  const int n = static_cast<int>(w.size());
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(std::move(w), std::move(es));
}

// Vertex 0 is the centre.
inline Graph star_graph(Weight center, std::vector<Weight> leaves) {
  std::vector<Weight> w{center};
  std::vector<Edge> es;
  for (auto l : leaves) {
    es.push_back({0, static_cast<Vertex>(w.size())});
    w.push_back(l);
  }
  return Graph(std::move(w), std::move(es));
}

// Connected random graph: random tree plus extra edges, uniform weights.
inline Graph random_connected(std::mt19937_64& rng, int n, int extra, Weight max_w) {
  std::vector<Weight> w(n);
  for (auto& x : w) x = static_cast<Weight>(rng() % (max_w + 1));
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back(make_edge(static_cast<Vertex>(rng() % v), v));
  const int max_m = n * (n - 1) / 2;
  int target = std::min<int>(max_m, n - 1 + extra);
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  std::shuffle(all.begin(), all.end(), rng);
  for (const auto& e : all) {
    if (static_cast<int>(es.size()) >= target) break;
    if (std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
  }
  return Graph(std::move(w), std::move(es));
}

}  // namespace mwist::testing
