#include "mwist/operation1.hpp"

#include <algorithm>

#include "mwist/oracle.hpp"

namespace mwist {

namespace {

constexpr int max_component = 4;

// Components of G - v that contain a neighbour of v and have 2..4 vertices,
// ordered by smallest vertex. BFS stops as soon as a component is too big.
std::vector<std::vector<Vertex>> small_components_at(const Graph& g, Vertex v,
                                                     std::vector<int>& mark, int& stamp) {
  std::vector<std::vector<Vertex>> out;
  ++stamp;
  const int seen = stamp;
  for (Vertex s : g.neighbors(v)) {
    if (mark[s] >= seen) continue;
    ++stamp;
    const int cur = stamp;
    std::vector<Vertex> comp{s};
    mark[s] = cur;
    bool big = false;
    for (std::size_t i = 0; i < comp.size() && !big; ++i) {
      for (Vertex y : g.neighbors(comp[i])) {
        if (y == v || mark[y] == cur) continue;
        if (mark[y] >= seen) {
          // reached through an earlier, oversized search
          big = true;
          break;
        }
        mark[y] = cur;
        comp.push_back(y);
        if (static_cast<int>(comp.size()) > max_component) {
          big = true;
          break;
        }
      }
    }
    if (big || comp.size() < 2) continue;
    if (g.n() - 1 - static_cast<int>(comp.size()) < 1) continue;  // v is not a cut vertex
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SmallCut> small_cuts(const Graph& g) {
  std::vector<SmallCut> out;
  std::vector<int> mark(g.n(), 0);
  int stamp = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    for (auto& c : small_components_at(g, v, mark, stamp)) out.push_back({v, std::move(c)});
  return out;
}

std::optional<SmallCut> find_small_cut(const Graph& g) {
  std::vector<int> mark(g.n(), 0);
  int stamp = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto comps = small_components_at(g, v, mark, stamp);
    if (!comps.empty()) return SmallCut{v, std::move(comps.front())};
  }
  return std::nullopt;
}

std::pair<Weight, std::vector<Edge>> hanging_weight(const Graph& g, const SmallCut& cut) {
  std::vector<Vertex> verts{cut.cut_vertex};
  verts.insert(verts.end(), cut.component.begin(), cut.component.end());
  Graph local = induced_subgraph(g, verts);
  std::vector<Weight> w = local.weights();
  w[0] = 0;
  Graph zeroed(std::move(w), local.edges());
  auto best = exact_mwist(zeroed);
  std::vector<Edge> tree;
  for (const auto& e : best.tree.edges) tree.push_back(make_edge(verts[e.u], verts[e.v]));
  std::sort(tree.begin(), tree.end());
  return {best.opt, std::move(tree)};
}

std::pair<Graph, ReductionRecord> reduce_once(const Graph& g, const SmallCut& cut) {
  ReductionRecord rec;
  rec.cut_vertex = cut.cut_vertex;
  rec.removed_vertices = cut.component;
  std::tie(rec.tw, rec.local_tree) = hanging_weight(g, cut);

  std::vector<char> removed(g.n(), 0);
  for (Vertex x : cut.component) removed[x] = 1;
  std::vector<Vertex> to_new(g.n(), no_vertex);
  std::vector<Weight> w;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (removed[x]) continue;
    to_new[x] = static_cast<Vertex>(rec.to_previous.size());
    rec.to_previous.push_back(x);
    w.push_back(g.weight(x));
  }
  rec.added_stub = static_cast<Vertex>(w.size());
  rec.to_previous.push_back(no_vertex);
  w.push_back(0);

  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (!removed[e.u] && !removed[e.v]) es.push_back(make_edge(to_new[e.u], to_new[e.v]));
  es.push_back(make_edge(to_new[cut.cut_vertex], rec.added_stub));
  return {Graph(std::move(w), std::move(es)), std::move(rec)};
}

Reduction apply_operation1(const Graph& g) {
  Reduction r{g, {}, 0};
  while (auto cut = find_small_cut(r.graph)) {
    auto [next, rec] = reduce_once(r.graph, *cut);
    r.total_tw += rec.tw;
    r.records.push_back(std::move(rec));
    r.graph = std::move(next);
  }
  return r;
}

SpanningTree undo_operation1(const SpanningTree& reduced_tree,
                             std::span<const ReductionRecord> records) {
  std::vector<Edge> cur = reduced_tree.edges;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const auto& rec = *it;
    std::vector<Edge> prev;
    prev.reserve(cur.size() + rec.local_tree.size());
    for (const auto& e : cur) {
      if (e.has(rec.added_stub)) continue;
      prev.push_back(make_edge(rec.to_previous[e.u], rec.to_previous[e.v]));
    }
    prev.insert(prev.end(), rec.local_tree.begin(), rec.local_tree.end());
    std::sort(prev.begin(), prev.end());
    cur = std::move(prev);
  }
  return SpanningTree{std::move(cur)};
}

}  // namespace mwist
