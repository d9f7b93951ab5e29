#pragma once

#include <string>
#include <vector>

#include "mwist/settle.hpp"

namespace mwist::detail {

struct Candidate {
  enum class Break : std::uint8_t { None, Lightest, Among };
  std::string branch;
  std::vector<Edge> add;
  std::vector<Edge> del;
  Break brk = Break::None;
  std::vector<int> among;  // pairs eligible for Break::Among
  Vertex leaf = no_vertex;
  Vertex outside = no_vertex;
};

// One leg of a type I-IV component: the core pair and the type-V path hanging
// off its tail.
struct Leg {
  int slot = -1;
  int j = -1;
  std::vector<int> path;  // core outwards
  Vertex a = no_vertex, b = no_vertex;    // a_j, b_j
  Vertex ta = no_vertex, tb = no_vertex;  // a^i, b^i
};

struct Where {
  enum class Kind : std::uint8_t { CoreHead, CoreTail, PathHead, PathTail, X, None };
  int slot = -1;
  Kind kind = Kind::None;
  int pos = -1;  // index into the leg path
};

class Settler {
 public:
  Settler(const Graph& g, const Stages& s, int component);

  const Graph& g;
  const Stages& s;
  const ComponentView& c;
  const AbxPartition& p;
  const int id;

  Weight w(Vertex v) const { return g.weight(v); }
  bool inside(Vertex v) const { return v >= 0 && s.component_of[v] == id; }
  bool adj(Vertex a, Vertex b) const { return a >= 0 && b >= 0 && g.has_edge(a, b); }
  Vertex outside_neighbor(Vertex v) const;
  Vertex partner(Vertex v) const { return p.partner[v]; }
  int pair_of(Vertex v) const { return p.pair_of[v]; }

  Leg leg(int slot) const;
  Where where(Vertex v) const;
  // Tail next to path head number pos on the core side.
  Vertex inner_tail(const Leg& l, int pos) const;
  std::vector<int> tree_dist(Vertex src) const;  // indexed like c.vertices, -1 unreachable
  int local(Vertex v) const;
  // Neighbour of b inside the component farthest from b on the H3 tree;
  // ties go to the higher pair index.
  Vertex farthest_neighbor(Vertex b) const;
  int dist(Vertex from, Vertex to) const;

  void cand(const std::string& branch, std::vector<Edge> add, std::vector<Edge> del);
  void cand_break(const std::string& branch, std::vector<Edge> add, std::vector<Edge> del);
  void cand_among(const std::string& branch, std::vector<Edge> add, std::vector<Edge> del,
                  std::vector<int> among);
  // Skipped when leaf has no neighbour outside the component.
  void cand_out(const std::string& branch, std::vector<Edge> add, std::vector<Edge> del,
                Vertex leaf);
  void plain(const std::string& branch) { cand(branch, {}, {}); }

  // Bounded exchange search: up to `depth` swaps using non-tree edges with an
  // endpoint in focus, each optionally followed by an outward edge.
  void exchange_search(const std::string& branch, const std::vector<Vertex>& focus, int depth);

  [[noreturn]] void impossible(const std::string& branch, const std::string& why) const;

  SettledTree finish(const std::string& top);

 private:
  struct Eval {
    bool ok = false;
    EdgeSet edges;
    Weight internal = 0;
    Weight counted = 0;
  };
  Eval evaluate(const Candidate& cand) const;
  Eval evaluate_edges(EdgeSet t, const Candidate& cand) const;
  Candidate plain_candidate() const;

  EdgeSet base_;
  std::vector<Candidate> cands_;
};

// Per type case analyses.
SettledTree settle_type1(Settler& S);
SettledTree settle_type2(Settler& S);
SettledTree settle_type3(Settler& S);
SettledTree settle_type4(Settler& S);
SettledTree settle_type6(Settler& S);

inline Edge E(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace mwist::detail
