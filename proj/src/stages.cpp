#include "mwist/stages.hpp"

#include <algorithm>
#include <map>

#include "mwist/error.hpp"
#include "mwist/union_find.hpp"

namespace mwist {

std::string to_string(ComponentType t) {
  switch (t) {
    case ComponentType::I: return "I";
    case ComponentType::II: return "II";
    case ComponentType::III: return "III";
    case ComponentType::IV: return "IV";
    case ComponentType::V: return "V";
    case ComponentType::VI: return "VI";
    case ComponentType::Trivial: return "trivial";
  }
  return "?";
}

Vertex ComponentView::leg_tail(const AbxPartition& p, int i) const {
  return attached[i].empty() ? p.pairs[core[i]].tail : p.pairs[attached[i].back()].tail;
}

Vertex ComponentView::leg_head(const AbxPartition& p, int i) const {
  return attached[i].empty() ? p.pairs[core[i]].head : p.pairs[attached[i].back()].head;
}

std::vector<Edge> eaa_claw(const Graph& g, const AbxPartition& part) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (part.is_head(e.u) && part.is_head(e.v)) out.push_back(e);
  return out;
}

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

}  // namespace

Stages build_stages(const Graph& g, const Matching& mstar) {
  Stages s;
  s.mstar = mstar;
  s.part = partition_abx(g, mstar);
  const auto& part = s.part;
  const auto& pairs = part.pairs;
  const int k = static_cast<int>(pairs.size());
  const int n = g.n();
  auto head = [&](int j) { return pairs[j].head; };
  auto tail = [&](int j) { return pairs[j].tail; };

  for (const auto& p : pairs) s.h3.insert(make_edge(p.head, p.tail));

  // M^aa and the isolated pairs of H0 before N^aa.
  s.maa = EdgeSet(max_cardinality_matching(g, eaa_claw(g, part)).edges);
  std::vector<Vertex> aa_mate(n, no_vertex);
  for (const auto& e : s.maa) {
    aa_mate[e.u] = e.v;
    aa_mate[e.v] = e.u;
  }
  std::vector<char> isolated(k, 0);
  for (int j = 0; j < k; ++j) isolated[j] = aa_mate[head(j)] == no_vertex;

  for (const auto& e : s.maa) {
    std::vector<Vertex> hs;
    for (Vertex end : {e.u, e.v})
      for (Vertex y : g.neighbors(end))
        if (part.is_head(y) && isolated[part.pair_of[y]]) hs.push_back(y);
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    if (hs.size() > 1)
      throw claw_violation_error("maa_pair", "M^aa edge {" + vtx(e.u) + "," + vtx(e.v) +
                                               "} sees isolated heads " + vtx(hs[0]) + " and " +
                                               vtx(hs[1]));
  }

  struct Core {
    ComponentType type;
    std::vector<int> core;
    Vertex x = no_vertex;
  };
  std::vector<Core> cores;
  std::map<Edge, int> maa_core;  // M^aa edge -> index in cores
  for (const auto& e : s.maa) {
    maa_core[e] = static_cast<int>(cores.size());
    cores.push_back({ComponentType::I, {part.pair_of[e.u], part.pair_of[e.v]}});
  }

  // N^aa
  for (int j = 0; j < k; ++j) {
    if (!isolated[j]) continue;
    Vertex centre = no_vertex;
    for (Vertex y : g.neighbors(head(j)))
      if (part.is_head(y) && aa_mate[y] != no_vertex) {
        centre = y;
        break;
      }
    if (centre == no_vertex) continue;
    s.naa.insert(make_edge(head(j), centre));
    isolated[j] = 0;
    auto& c = cores[maa_core.at(make_edge(centre, aa_mate[centre]))];
    c.type = ComponentType::II;
    c.core = {part.pair_of[aa_mate[centre]], part.pair_of[centre], j};
  }

  // isolated heads never see another head once M^aa is maximum
  for (int j = 0; j < k; ++j) {
    if (!isolated[j]) continue;
    for (Vertex y : g.neighbors(head(j)))
      if (part.is_head(y))
        throw claw_violation_error("isolated_head", "isolated head " + vtx(head(j)) +
                                                 " is adjacent to head " + vtx(y));
  }

  // N^ax
  for (Vertex x = 0; x < n; ++x) {
    if (!part.is_x(x)) continue;
    int cnt = 0;
    for (Vertex y : g.neighbors(x))
      if (part.is_head(y) && isolated[part.pair_of[y]]) ++cnt;
    if (cnt > 2)
      throw claw_violation_error("x_vertex", "X vertex " + vtx(x) + " sees " +
                                               std::to_string(cnt) + " isolated heads");
  }
  std::vector<std::vector<int>> x_heads(n);
  for (int j = 0; j < k; ++j) {
    if (!isolated[j]) continue;
    for (Vertex y : g.neighbors(head(j)))
      if (part.is_x(y)) {
        s.nax.insert(make_edge(head(j), y));
        x_heads[y].push_back(j);
        isolated[j] = 0;
        break;
      }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (x_heads[x].empty()) continue;
    cores.push_back({x_heads[x].size() == 1 ? ComponentType::III : ComponentType::IV,
                     x_heads[x], x});
  }

  // M^ab on E^ab_0, then paths and cycles of isolated pairs.
  std::vector<Edge> eab0;
  for (int j = 0; j < k; ++j) {
    if (!isolated[j]) continue;
    bool has_tail = false;
    for (Vertex y : g.neighbors(head(j))) {
      if (!part.is_tail(y) || y == tail(j)) continue;
      has_tail = true;
      if (isolated[part.pair_of[y]]) eab0.push_back(make_edge(head(j), y));
    }
    if (!has_tail)
      throw claw_violation_error("isolated_tail", "isolated head " + vtx(head(j)) +
                                               " has no neighbouring tail");
  }
  std::sort(eab0.begin(), eab0.end());
  s.mab = EdgeSet(max_cardinality_matching(g, eab0).edges);
  std::vector<int> next(k, -1), prev(k, -1);
  for (const auto& e : s.mab) {
    Vertex h = part.is_head(e.u) ? e.u : e.v;
    int a = part.pair_of[h], b = part.pair_of[e.other(h)];
    next[a] = b;
    prev[b] = a;
  }
  std::vector<std::vector<int>> paths, cycles;
  std::vector<char> seen(k, 0);
  for (int j = 0; j < k; ++j) {
    if (!isolated[j] || prev[j] != -1) continue;
    std::vector<int> path;
    for (int c = j; c != -1; c = next[c]) {
      path.push_back(c);
      seen[c] = 1;
    }
    // Split off cycles while the free tail sees a head further along.
    while (!path.empty()) {
      const Vertex t = tail(path[0]);
      int best = -1;
      for (int i = 1; i < static_cast<int>(path.size()); ++i)
        if (g.has_edge(t, head(path[i]))) best = i;
      if (best < 0) break;
      if (best + 1 < static_cast<int>(path.size()))
        s.mab.erase(make_edge(head(path[best]), tail(path[best + 1])));
      s.mab.insert(make_edge(head(path[best]), t));
      cycles.emplace_back(path.begin(), path.begin() + best + 1);
      path.erase(path.begin(), path.begin() + best + 1);
    }
    if (!path.empty()) paths.push_back(std::move(path));
  }
  for (int j = 0; j < k; ++j) {
    if (!isolated[j] || seen[j]) continue;
    std::vector<int> cyc;
    for (int c = j; !seen[c]; c = next[c]) {
      cyc.push_back(c);
      seen[c] = 1;
    }
    cycles.push_back(std::move(cyc));
  }

  // N^ab: every type-V free head hangs on a tail of a type I-IV pair.
  std::vector<int> core_of_pair(k, -1), slot_of_pair(k, -1);
  for (int c = 0; c < static_cast<int>(cores.size()); ++c)
    for (int i = 0; i < static_cast<int>(cores[c].core.size()); ++i) {
      core_of_pair[cores[c].core[i]] = c;
      slot_of_pair[cores[c].core[i]] = i;
    }
  std::vector<char> free_head(n, 0);
  for (const auto& p : paths) free_head[head(p.back())] = 1;
  for (int j = 0; j < k; ++j) {
    if (core_of_pair[j] < 0) continue;
    int cnt = 0;
    for (Vertex y : g.neighbors(tail(j)))
      if (free_head[y]) ++cnt;
    if (cnt > 1)
      throw claw_violation_error("type_v", "tail " + vtx(tail(j)) + " sees " +
                                               std::to_string(cnt) + " free type-V heads");
  }
  std::vector<std::vector<std::vector<int>>> attached(cores.size());
  for (std::size_t c = 0; c < cores.size(); ++c) attached[c].resize(cores[c].core.size());
  for (const auto& p : paths) {
    const Vertex h = head(p.back());
    Vertex target = no_vertex;
    for (Vertex y : g.neighbors(h))
      if (part.is_tail(y) && core_of_pair[part.pair_of[y]] >= 0) {
        target = y;
        break;
      }
    if (target == no_vertex)
      throw claw_violation_error("type_v", "free type-V head " + vtx(h) +
                                               " sees no tail of a type I-IV component");
    s.nab.insert(make_edge(h, target));
    const int j = part.pair_of[target];
    attached[core_of_pair[j]][slot_of_pair[j]].assign(p.rbegin(), p.rend());
  }

  for (const auto* set : {&s.maa, &s.naa, &s.nax, &s.mab, &s.nab})
    for (const auto& e : *set) s.h3.insert(e);

  std::vector<int> deg(n, 0);
  for (const auto& e : s.h3) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int j = 0; j < k; ++j)
    if (deg[head(j)] < 2)
      throw claw_violation_error("head_degree", "head " + vtx(head(j)) + " has degree " +
                                               std::to_string(deg[head(j)]) + " in H3");

  // Views.
  s.component_of.assign(n, -1);
  auto finish = [&](ComponentView& c) {
    for (int j : c.core) c.mstar_pairs.push_back(j);
    for (const auto& a : c.attached) c.mstar_pairs.insert(c.mstar_pairs.end(), a.begin(), a.end());
    std::sort(c.mstar_pairs.begin(), c.mstar_pairs.end());
    for (int j : c.mstar_pairs) {
      c.vertices.push_back(head(j));
      c.vertices.push_back(tail(j));
      c.mstar_weight += pair_weight(g, pairs[j]);
    }
    if (c.x != no_vertex) c.vertices.push_back(c.x);
    std::sort(c.vertices.begin(), c.vertices.end());
    const int id = static_cast<int>(s.components.size());
    for (Vertex v : c.vertices) s.component_of[v] = id;
    s.components.push_back(std::move(c));
  };
  for (std::size_t c = 0; c < cores.size(); ++c) {
    ComponentView v;
    v.type = cores[c].type;
    v.core = cores[c].core;
    v.x = cores[c].x;
    v.attached = std::move(attached[c]);
    finish(v);
  }
  for (auto& cyc : cycles) {
    ComponentView v;
    v.type = ComponentType::VI;
    v.core = std::move(cyc);
    finish(v);
  }
  for (Vertex x = 0; x < n; ++x) {
    if (s.component_of[x] >= 0) continue;
    ComponentView v;
    v.type = ComponentType::Trivial;
    v.vertices = {x};
    const int id = static_cast<int>(s.components.size());
    s.component_of[x] = id;
    s.components.push_back(std::move(v));
  }
  for (const auto& e : s.h3) {
    const int cu = s.component_of[e.u];
    if (cu != s.component_of[e.v])
      throw error("H3 edge {" + vtx(e.u) + "," + vtx(e.v) + "} crosses components");
    s.components[cu].edges.push_back(e);
  }
  return s;
}

}  // namespace mwist
