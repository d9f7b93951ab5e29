#pragma once

#include <optional>
#include <vector>

#include "mwist/certificate.hpp"
#include "mwist/graph.hpp"
#include "mwist/matching.hpp"
#include "mwist/union_find.hpp"

namespace mwist {

enum class Role : std::uint8_t { HeadA, TailB, ExtraX };

// One kept M*-edge. Index order is the order of M*'s sorted edge list after
// dropping weight-0 edges.
struct MatchedPair {
  Vertex head;
  Vertex tail;
};

struct AbxPartition {
  std::vector<Role> role;
  std::vector<Vertex> partner;  // no_vertex for X
  std::vector<int> pair_of;     // index into pairs, -1 for X
  std::vector<MatchedPair> pairs;

  bool is_head(Vertex v) const { return role[v] == Role::HeadA; }
  bool is_tail(Vertex v) const { return role[v] == Role::TailB; }
  bool is_x(Vertex v) const { return role[v] == Role::ExtraX; }
};

AbxPartition partition_abx(const Graph& g, const Matching& mstar);

inline Weight pair_weight(const Graph& g, const MatchedPair& p) {
  return g.weight(p.head) + g.weight(p.tail);
}

struct ForestState {
  EdgeSet kept_edges;
  UnionFind component;
  std::vector<char> settled;   // indexed by component root at time of query
  std::vector<char> isolated;  // per pair

  bool is_settled(Vertex v) { return settled[component.find(v)] != 0; }
  // Pair indices grouped by component, each group ascending, groups ordered
  // by their first pair.
  std::vector<std::vector<int>> mst_edges_in_component(const AbxPartition& part);
};

// Heaviest-first Kruskal over E(A, A u X) on top of M*.
ForestState build_h0(const Graph& g, const AbxPartition& part);

// Chains every isolated pair into a settled component; asserts the per
// component predicate 2 * internal >= w(C n M*) at the end.
void absorb_isolated(ForestState& state, const Graph& g, const AbxPartition& part);

SpanningTree connect_forest(const Graph& g, const ForestState& state);
SpanningTree connect_edges(const Graph& g, std::span<const Edge> forest);

// A matching with lifted weight >= internal_weight(g, t).
Matching tree_to_matching(const Graph& g, const SpanningTree& t);

Weight upper_bound_certificate(const Graph& g);

struct HalfResult {
  SpanningTree tree;
  RatioCertificate certificate;
  Matching mstar;  // on the normalized graph
  Weight normalization_delta = 0;
};

HalfResult approx_half(const Graph& g);

// Same pipeline with a precomputed M* of the normalized graph.
HalfResult approx_half(const Graph& g, const Matching& mstar_normalized);

}  // namespace mwist
