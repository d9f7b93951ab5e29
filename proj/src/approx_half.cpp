#include "mwist/approx_half.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "mwist/error.hpp"

namespace mwist {

AbxPartition partition_abx(const Graph& g, const Matching& mstar) {
  AbxPartition p;
  p.role.assign(g.n(), Role::ExtraX);
  p.partner.assign(g.n(), no_vertex);
  p.pair_of.assign(g.n(), -1);
  std::vector<Edge> es = mstar.edges;
  std::sort(es.begin(), es.end());
  for (const auto& e : es) {
    if (g.weight(e.u) + g.weight(e.v) == 0) continue;
    Vertex head = g.weight(e.u) >= g.weight(e.v) ? e.u : e.v;
    Vertex tail = e.other(head);
    p.role[head] = Role::HeadA;
    p.role[tail] = Role::TailB;
    p.partner[head] = tail;
    p.partner[tail] = head;
    p.pair_of[head] = p.pair_of[tail] = static_cast<int>(p.pairs.size());
    p.pairs.push_back({head, tail});
  }
  return p;
}

std::vector<std::vector<int>> ForestState::mst_edges_in_component(const AbxPartition& part) {
  std::map<int, std::vector<int>> by_root;
  std::vector<int> order;
  for (int j = 0; j < static_cast<int>(part.pairs.size()); ++j) {
    int r = component.find(part.pairs[j].head);
    if (!by_root.count(r)) order.push_back(r);
    by_root[r].push_back(j);
  }
  std::vector<std::vector<int>> out;
  for (int r : order) out.push_back(by_root[r]);
  return out;
}

ForestState build_h0(const Graph& g, const AbxPartition& part) {
  ForestState s;
  s.component = UnionFind(g.n());
  for (const auto& pr : part.pairs) {
    s.kept_edges.insert(make_edge(pr.head, pr.tail));
    s.component.unite(pr.head, pr.tail);
  }
  std::vector<int> cand;
  for (int i = 0; i < g.m(); ++i) {
    const auto& e = g.edges()[i];
    bool ua = part.is_head(e.u), va = part.is_head(e.v);
    bool ux = part.is_x(e.u), vx = part.is_x(e.v);
    if ((ua && (va || vx)) || (va && ux)) cand.push_back(i);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
    const auto& ea = g.edges()[a];
    const auto& eb = g.edges()[b];
    return g.weight(ea.u) + g.weight(ea.v) > g.weight(eb.u) + g.weight(eb.v);
  });
  for (int i : cand) {
    const auto& e = g.edges()[i];
    if (s.component.unite(e.u, e.v)) s.kept_edges.insert(e);
  }
  // A component is settled when it holds more than one edge.
  std::vector<int> edge_count(g.n(), 0);
  for (const auto& e : s.kept_edges) ++edge_count[s.component.find(e.u)];
  s.settled.assign(g.n(), 0);
  s.isolated.assign(part.pairs.size(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (s.component.find(v) == v && edge_count[v] > 1) s.settled[v] = 1;
  for (int j = 0; j < static_cast<int>(part.pairs.size()); ++j)
    s.isolated[j] = edge_count[s.component.find(part.pairs[j].head)] == 1;
  return s;
}

namespace {

void check_half_predicate(ForestState& s, const Graph& g, const AbxPartition& part) {
  std::vector<int> deg(g.n(), 0);
  for (const auto& e : s.kept_edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::map<int, Weight> internal, mstar;
  for (Vertex v = 0; v < g.n(); ++v)
    if (deg[v] >= 2) internal[s.component.find(v)] += g.weight(v);
  for (const auto& pr : part.pairs) mstar[s.component.find(pr.head)] += pair_weight(g, pr);
  for (const auto& [root, w] : mstar)
    if (2 * internal[root] < w)
      throw certificate_violation_error("component at vertex " + std::to_string(root) +
                                        " has internal weight " + std::to_string(internal[root]) +
                                        " below half of its matched weight " + std::to_string(w));
}

}  // namespace

void absorb_isolated(ForestState& s, const Graph& g, const AbxPartition& part) {
  const int k = static_cast<int>(part.pairs.size());
  std::vector<char> in_chain(k, 0);
  for (int j = 0; j < k; ++j) {
    if (!s.isolated[j]) continue;
    std::vector<int> chain{j};
    in_chain[j] = 1;
    s.isolated[j] = 0;
    int cur = j;
    while (true) {
      const Vertex a = part.pairs[cur].head;
      Vertex to_settled = no_vertex, to_isolated = no_vertex, to_inside = no_vertex;
      for (Vertex y : g.neighbors(a)) {
        if (y == part.pairs[cur].tail) continue;
        if (!part.is_tail(y))
          throw error("head " + std::to_string(a) + " of an isolated edge has a non-tail neighbour " +
                      std::to_string(y));
        int i = part.pair_of[y];
        if (in_chain[i]) {
          if (to_inside == no_vertex) to_inside = y;
        } else if (s.isolated[i]) {
          if (to_isolated == no_vertex) to_isolated = y;
        } else if (to_settled == no_vertex) {
          to_settled = y;
        }
      }
      if (to_settled != no_vertex) {
        s.kept_edges.insert(make_edge(a, to_settled));
        for (int c : chain) s.component.unite(part.pairs[c].head, to_settled);
        s.settled[s.component.find(a)] = 1;
        break;
      }
      if (to_isolated != no_vertex) {
        int i = part.pair_of[to_isolated];
        s.kept_edges.insert(make_edge(a, to_isolated));
        s.component.unite(a, to_isolated);
        in_chain[i] = 1;
        s.isolated[i] = 0;
        chain.push_back(i);
        cur = i;
        continue;
      }
      if (to_inside != no_vertex) {
        // The cycle runs from the pair owning to_inside to the end of the chain.
        int start = static_cast<int>(std::find(chain.begin(), chain.end(), part.pair_of[to_inside]) - chain.begin());
        int lightest = -1;
        for (std::size_t c = start; c < chain.size(); ++c) {
          int idx = chain[c];
          if (lightest == -1 || pair_weight(g, part.pairs[idx]) < pair_weight(g, part.pairs[lightest]) ||
              (pair_weight(g, part.pairs[idx]) == pair_weight(g, part.pairs[lightest]) && idx < lightest))
            lightest = idx;
        }
        s.kept_edges.insert(make_edge(a, to_inside));
        s.kept_edges.erase(make_edge(part.pairs[lightest].head, part.pairs[lightest].tail));
        s.settled[s.component.find(a)] = 1;
        break;
      }
      throw error("head " + std::to_string(a) + " of an isolated edge has no other neighbour");
    }
    for (int c : chain) in_chain[c] = 0;
  }
  check_half_predicate(s, g, part);
}

SpanningTree connect_edges(const Graph& g, std::span<const Edge> forest) {
  UnionFind uf(g.n());
  SpanningTree t;
  for (const auto& e : forest) {
    if (!uf.unite(e.u, e.v)) throw invalid_tree_error("forest contains a cycle");
    t.edges.push_back(e);
  }
  for (const auto& e : g.edges())
    if (uf.unite(e.u, e.v)) t.edges.push_back(e);
  if (uf.sets() > 1 && g.n() > 0) throw disconnected_error("graph is disconnected");
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

SpanningTree connect_forest(const Graph& g, const ForestState& state) {
  return connect_edges(g, state.kept_edges.edges());
}

Matching tree_to_matching(const Graph& g, const SpanningTree& t) {
  const int n = g.n();
  Matching m;
  if (n <= 1) return m;
  auto deg = tree_degrees(n, t.edges);
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  Vertex root = 0;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] >= 2) {
      root = v;
      break;
    }
  // Edges in BFS order from the root: the order of their distance to it.
  std::vector<int> depth(n, -1);
  std::vector<Edge> order;
  std::queue<Vertex> q;
  q.push(root);
  depth[root] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v])
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        order.push_back(make_edge(v, w));
        q.push(w);
      }
  }
  std::vector<char> covered(n, 0);
  auto take = [&](const Edge& e) {
    covered[e.u] = covered[e.v] = 1;
    m.edges.push_back(e);
    m.weight += g.weight(e.u) + g.weight(e.v);
  };
  // An edge is unmarked while neither endpoint has been covered.
  for (const auto& e : order)
    if (deg[e.u] >= 2 && deg[e.v] >= 2 && !covered[e.u] && !covered[e.v]) take(e);
  for (const auto& e : order)
    if (!covered[e.u] && !covered[e.v]) take(e);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Weight upper_bound_certificate(const Graph& g) {
  return max_weight_matching(normalize_leaves(g).graph).weight;
}

HalfResult approx_half(const Graph& g) {
  auto norm = normalize_leaves(g);
  return approx_half(g, max_weight_matching(norm.graph));
}

HalfResult approx_half(const Graph& g, const Matching& mstar) {
  if (!is_connected(g)) throw disconnected_error("graph is disconnected");
  auto norm = normalize_leaves(g);
  const Graph& ng = norm.graph;
  HalfResult r;
  r.normalization_delta = norm.removed_weight;
  r.mstar = mstar;
  if (ng.n() <= 2) {
    r.tree.edges = ng.edges();
  } else {
    auto part = partition_abx(ng, mstar);
    auto state = build_h0(ng, part);
    absorb_isolated(state, ng, part);
    r.tree = connect_forest(ng, state);
  }
  auto& c = r.certificate;
  c.tree_weight = internal_weight(g, r.tree);
  c.matching_weight = mstar.weight;
  c.upper_bound = mstar.weight;
  c.ratio = ratio_half;
  if (!c.holds())
    throw certificate_violation_error("2*w(T) = " + std::to_string(2 * c.tree_weight) +
                                      " < w(M*) = " + std::to_string(c.matching_weight));
  return r;
}

}  // namespace mwist
