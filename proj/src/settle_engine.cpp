#include "settle_engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

#include "mwist/error.hpp"
#include "mwist/union_find.hpp"

namespace mwist {

namespace detail {

namespace {

Candidate make_candidate(const std::string& branch, std::vector<Edge> add, std::vector<Edge> del) {
  Candidate k;
  k.branch = branch;
  k.add = std::move(add);
  k.del = std::move(del);
  return k;
}

}  // namespace

Settler::Settler(const Graph& g_, const Stages& s_, int component)
    : g(g_), s(s_), c(s_.components[component]), p(s_.part), id(component),
      base_(c.edges) {}

int Settler::local(Vertex v) const {
  auto it = std::lower_bound(c.vertices.begin(), c.vertices.end(), v);
  return static_cast<int>(it - c.vertices.begin());
}

Vertex Settler::outside_neighbor(Vertex v) const {
  if (v < 0) return no_vertex;
  for (Vertex y : g.neighbors(v))
    if (!inside(y)) return y;
  return no_vertex;
}

Leg Settler::leg(int slot) const {
  Leg l;
  l.slot = slot;
  l.j = c.core[slot];
  l.path = c.attached[slot];
  l.a = p.pairs[l.j].head;
  l.b = p.pairs[l.j].tail;
  l.ta = c.leg_head(p, slot);
  l.tb = c.leg_tail(p, slot);
  return l;
}

Where Settler::where(Vertex v) const {
  if (v == c.x) return {-1, Where::Kind::X, -1};
  for (int i = 0; i < static_cast<int>(c.core.size()); ++i) {
    const auto& pr = p.pairs[c.core[i]];
    if (v == pr.head) return {i, Where::Kind::CoreHead, -1};
    if (v == pr.tail) return {i, Where::Kind::CoreTail, -1};
    const auto& path = c.attached[i];
    for (int q = 0; q < static_cast<int>(path.size()); ++q) {
      if (v == p.pairs[path[q]].head) return {i, Where::Kind::PathHead, q};
      if (v == p.pairs[path[q]].tail) return {i, Where::Kind::PathTail, q};
    }
  }
  return {};
}

Vertex Settler::inner_tail(const Leg& l, int pos) const {
  return pos == 0 ? l.b : p.pairs[l.path[pos - 1]].tail;
}

std::vector<int> Settler::tree_dist(Vertex src) const {
  const int nv = static_cast<int>(c.vertices.size());
  std::vector<std::vector<int>> nb(nv);
  for (const auto& e : base_) {
    nb[local(e.u)].push_back(local(e.v));
    nb[local(e.v)].push_back(local(e.u));
  }
  std::vector<int> d(nv, -1);
  std::deque<int> q{local(src)};
  d[local(src)] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : nb[x])
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return d;
}

int Settler::dist(Vertex from, Vertex to) const { return tree_dist(from)[local(to)]; }

Vertex Settler::farthest_neighbor(Vertex b) const {
  auto d = tree_dist(b);
  Vertex best = no_vertex;
  std::tuple<int, int, Vertex> key{-1, -2, -1};
  for (Vertex y : g.neighbors(b)) {
    if (!inside(y)) continue;
    std::tuple<int, int, Vertex> k{d[local(y)], pair_of(y), y};
    if (k > key) {
      key = k;
      best = y;
    }
  }
  return best;
}

void Settler::cand(const std::string& branch, std::vector<Edge> add, std::vector<Edge> del) {
  cands_.push_back(make_candidate(branch, std::move(add), std::move(del)));
}

void Settler::cand_break(const std::string& branch, std::vector<Edge> add,
                         std::vector<Edge> del) {
  Candidate k = make_candidate(branch, std::move(add), std::move(del));
  k.brk = Candidate::Break::Lightest;
  cands_.push_back(std::move(k));
}

void Settler::cand_among(const std::string& branch, std::vector<Edge> add,
                         std::vector<Edge> del, std::vector<int> among) {
  Candidate k = make_candidate(branch, std::move(add), std::move(del));
  k.brk = Candidate::Break::Among;
  k.among = std::move(among);
  cands_.push_back(std::move(k));
}

void Settler::cand_out(const std::string& branch, std::vector<Edge> add, std::vector<Edge> del,
                       Vertex leaf) {
  const Vertex out = outside_neighbor(leaf);
  if (out == no_vertex) return;
  Candidate k = make_candidate(branch, std::move(add), std::move(del));
  k.leaf = leaf;
  k.outside = out;
  cands_.push_back(std::move(k));
}

void Settler::impossible(const std::string& branch, const std::string& why) const {
  throw claw_violation_error(branch, why);
}

Settler::Eval Settler::evaluate(const Candidate& k) const {
  EdgeSet t = base_;
  for (const auto& d : k.del)
    if (d.u < 0 || !t.erase(d)) return {};
  for (const auto& a : k.add) {
    if (a.u < 0 || !inside(a.u) || !inside(a.v) || !g.has_edge(a.u, a.v)) return {};
    if (!t.insert(a)) return {};
  }
  return evaluate_edges(std::move(t), k);
}

Settler::Eval Settler::evaluate_edges(EdgeSet t, const Candidate& k) const {
  const int nv = static_cast<int>(c.vertices.size());
  if (k.brk != Candidate::Break::None) {
    if (static_cast<int>(t.size()) != nv) return {};
    std::vector<int> deg(nv, 0);
    std::vector<std::vector<int>> nb(nv);
    for (const auto& e : t) {
      int a = local(e.u), b = local(e.v);
      ++deg[a];
      ++deg[b];
      nb[a].push_back(b);
      nb[b].push_back(a);
    }
    std::vector<char> gone(nv, 0);
    std::vector<int> stack;
    for (int i = 0; i < nv; ++i)
      if (deg[i] <= 1) stack.push_back(i);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (gone[x]) continue;
      gone[x] = 1;
      for (int y : nb[x])
        if (!gone[y] && --deg[y] == 1) stack.push_back(y);
    }
    // Cycle through every vertex: any edge may go, M* pairs included. On 2k
    // matched vertices its lightest edge is at most W/k.
    if (k.brk == Candidate::Break::Lightest &&
        std::none_of(gone.begin(), gone.end(), [](char x) { return x != 0; })) {
      const Edge* cut = nullptr;
      for (const auto& e : t)
        if (!cut || w(e.u) + w(e.v) < w(cut->u) + w(cut->v)) cut = &e;
      t.erase(Edge(*cut));
    } else {
      int pick = -1;
      for (const auto& e : t) {
        if (gone[local(e.u)] || gone[local(e.v)]) continue;
        if (partner(e.u) != e.v) continue;
        const int j = pair_of(e.u);
        if (j < 0) continue;
        if (k.brk == Candidate::Break::Among &&
            std::find(k.among.begin(), k.among.end(), j) == k.among.end())
          continue;
        if (pick < 0 || pair_weight(g, p.pairs[j]) < pair_weight(g, p.pairs[pick]) ||
            (pair_weight(g, p.pairs[j]) == pair_weight(g, p.pairs[pick]) && j < pick))
          pick = j;
      }
      if (pick < 0) return {};
      t.erase(E(p.pairs[pick].head, p.pairs[pick].tail));
    }
  }
  if (static_cast<int>(t.size()) != nv - 1) return {};
  UnionFind uf(nv);
  std::vector<int> deg(nv, 0);
  for (const auto& e : t) {
    int a = local(e.u), b = local(e.v);
    if (!uf.unite(a, b)) return {};
    ++deg[a];
    ++deg[b];
  }
  Eval ev;
  for (int i = 0; i < nv; ++i)
    if (deg[i] >= 2) ev.internal += w(c.vertices[i]);
  ev.counted = ev.internal;
  if (k.leaf != no_vertex) {
    if (deg[local(k.leaf)] != 1) return {};
    ev.counted += w(k.leaf);
  }
  ev.ok = true;
  ev.edges = std::move(t);
  return ev;
}

Candidate Settler::plain_candidate() const {
  Candidate k = make_candidate("plain", {}, {});
  if (c.type == ComponentType::VI) k.brk = Candidate::Break::Lightest;
  return k;
}

namespace {

std::vector<Edge> tree_path(const EdgeSet& t, Vertex a, Vertex b) {
  std::vector<std::pair<Vertex, Vertex>> adj;
  for (const auto& e : t) {
    adj.push_back({e.u, e.v});
    adj.push_back({e.v, e.u});
  }
  std::sort(adj.begin(), adj.end());
  std::vector<std::pair<Vertex, Vertex>> parent{{a, a}};
  auto parent_of = [&](Vertex v) -> Vertex {
    for (auto& pr : parent)
      if (pr.first == v) return pr.second;
    return no_vertex;
  };
  std::deque<Vertex> q{a};
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    if (x == b) break;
    auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<Vertex, Vertex>{x, -1});
    for (; it != adj.end() && it->first == x; ++it)
      if (parent_of(it->second) == no_vertex) {
        parent.push_back({it->second, x});
        q.push_back(it->second);
      }
  }
  std::vector<Edge> out;
  if (parent_of(b) == no_vertex) return out;
  for (Vertex v = b; v != a; v = parent_of(v)) out.push_back(E(v, parent_of(v)));
  return out;
}

}  // namespace

void Settler::exchange_search(const std::string& branch, const std::vector<Vertex>& focus,
                              int depth) {
  std::vector<Vertex> f;
  for (Vertex v : focus)
    if (v >= 0 && inside(v)) f.push_back(v);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  auto in_focus = [&](Vertex v) { return std::binary_search(f.begin(), f.end(), v); };

  std::vector<Edge> extra;
  for (Vertex v : c.vertices)
    for (Vertex y : g.neighbors(v))
      if (v < y && inside(y) && !base_.contains(E(v, y)) && (in_focus(v) || in_focus(y)))
        extra.push_back(E(v, y));

  auto push_all = [&](std::vector<Edge> add, std::vector<Edge> del) {
    cand(branch, add, del);
    for (Vertex l : f) cand_out(branch, add, del, l);
  };
  for (Vertex l : f) cand_out(branch, {}, {}, l);

  std::vector<std::pair<Edge, Edge>> first;
  for (const auto& e1 : extra)
    for (const auto& f1 : tree_path(base_, e1.u, e1.v)) {
      first.push_back({e1, f1});
      push_all({e1}, {f1});
    }
  if (depth < 2) return;
  for (const auto& k : cands_) {
    auto ev = evaluate(k);
    if (ev.ok && 3 * static_cast<__int128>(ev.counted) >= 2 * static_cast<__int128>(c.mstar_weight))
      return;
  }
  for (const auto& [e1, f1] : first) {
    EdgeSet t1 = base_;
    t1.erase(f1);
    t1.insert(e1);
    for (const auto& e2 : extra) {
      if (e2 == e1 || t1.contains(e2)) continue;
      for (const auto& f2 : tree_path(t1, e2.u, e2.v)) {
        if (f2 == e1) continue;
        if (!in_focus(f2.u) && !in_focus(f2.v) && partner(f2.u) != f2.v) continue;
        push_all({e1, e2}, {f1, f2});
      }
    }
  }
}

SettledTree Settler::finish(const std::string& top) {
  auto pick = [&](std::size_t from) {
    int best = -1;
    Eval best_ev;
    for (int i = static_cast<int>(from); i < static_cast<int>(cands_.size()); ++i) {
      auto ev = evaluate(cands_[i]);
      if (!ev.ok) continue;
      if (3 * static_cast<__int128>(ev.counted) < 2 * static_cast<__int128>(c.mstar_weight)) continue;
      if (best >= 0) {
        const bool out_i = cands_[i].leaf != no_vertex, out_b = cands_[best].leaf != no_vertex;
        if (out_i && !out_b) continue;
        if (out_i == out_b && ev.counted <= best_ev.counted) continue;
      }
      best = i;
      best_ev = std::move(ev);
    }
    return std::pair{best, std::move(best_ev)};
  };
  auto [best, best_ev] = pick(0);
  const std::size_t offered = cands_.size();
  bool searched = false;
  const Candidate plain = plain_candidate();
  const Eval plain_ev = evaluate(plain);
  const bool plain_settles =
      plain_ev.ok && 3 * static_cast<__int128>(plain_ev.counted) >= 2 * static_cast<__int128>(c.mstar_weight);
  if (best < 0 && !plain_settles) {
    // none of the constructions applies; look for any two-edge exchange
    exchange_search(top + ".rescue", c.vertices, 2);
    std::tie(best, best_ev) = pick(offered);
    searched = true;
  }

  SettledTree out;
  out.component = id;
  out.vertices = c.vertices;
  out.mstar_weight = c.mstar_weight;

  if (best < 0) {
    if (plain_settles) {
      out.branch = top + ".rescue";
      out.rescued = true;
      best_ev = plain_ev;
    } else {
      std::ostringstream msg;
      msg << "no construction settles component " << id << " (type " << to_string(c.type)
          << ", " << c.vertices.size() << " vertices, w(C n M*) = " << c.mstar_weight << "; "
          << offered << " candidates tried, exchange search too)";
      throw case_exhaustion_error(top, msg.str());
    }
  } else {
    const auto& k = cands_[best];
    out.branch = k.branch;
    out.rescued = searched;
    if (k.leaf != no_vertex) {
      out.outward_edge = E(k.leaf, k.outside);
      out.designated_leaf = k.leaf;
    }
  }
  out.tree_edges = best_ev.edges;
  out.internal = best_ev.internal;
  out.counted = best_ev.counted;
  if (plain_ev.ok && plain_ev.internal > out.internal) {
    out.fallback_edges = plain_ev.edges;
    out.fallback_internal = plain_ev.internal;
  } else {
    out.fallback_edges = out.tree_edges;
    out.fallback_internal = out.internal;
  }
  if (!out.predicate_holds())
    throw certificate_violation_error("settled predicate fails on component " +
                                      std::to_string(id));
  return out;
}

}  // namespace detail

SettledTree settle(const Graph& g, const Stages& s, int component) {
  const auto& c = s.components[component];
  if (c.type == ComponentType::Trivial) {
    SettledTree t;
    t.component = component;
    t.vertices = c.vertices;
    t.branch = "trivial";
    return t;
  }
  detail::Settler S(g, s, component);
  switch (c.type) {
    case ComponentType::I: return detail::settle_type1(S);
    case ComponentType::II: return detail::settle_type2(S);
    case ComponentType::III: return detail::settle_type3(S);
    case ComponentType::IV: return detail::settle_type4(S);
    case ComponentType::VI: return detail::settle_type6(S);
    default: break;
  }
  throw error("component " + std::to_string(component) + " of type " + to_string(c.type) +
              " cannot be settled");
}

std::string top_level_case(const std::string& branch) {
  auto first = branch.find('.');
  if (first == std::string::npos) return branch;
  auto second = branch.find('.', first + 1);
  return second == std::string::npos ? branch : branch.substr(0, second);
}

const std::vector<std::string>& settle_top_level_cases() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v;
    for (int i = 0; i <= 10; ++i) v.push_back("I." + std::to_string(i));
    for (int i = 0; i <= 10; ++i) v.push_back("II." + std::to_string(i));
    v.push_back("II.M");
    for (int i = 0; i <= 6; ++i) v.push_back("III." + std::to_string(i));
    for (int i = 0; i <= 10; ++i) v.push_back("IV." + std::to_string(i));
    v.push_back("VI.1");
    v.push_back("VI.2");
    return v;
  }();
  return all;
}

}  // namespace mwist
