#pragma once

#include <span>
#include <vector>

#include "mwist/graph.hpp"

namespace mwist {

struct Matching {
  std::vector<Edge> edges;  // sorted canonical
  Weight weight = 0;
};

struct WeightedEdge {
  Vertex u;
  Vertex v;
  Weight w;
};

// mate[v] or -1. Edmonds blossom algorithm, O(n^3), exact on integer weights.
std::vector<Vertex> max_weight_mates(int n, std::span<const WeightedEdge> edges);

// edge_weights aligned with g.edges(); the Matching weight is their sum.
Matching max_weight_matching(const Graph& g, std::span<const Weight> edge_weights);
// Lifted weights w(u) + w(v).
Matching max_weight_matching(const Graph& g);

// Maximum cardinality using only the edges in `subset` (must be edges of g).
// Reported weight uses lifted weights.
Matching max_cardinality_matching(const Graph& g, std::span<const Edge> subset);
std::vector<Vertex> max_cardinality_mates(int n, std::span<const Edge> edges);

bool is_matching(const Graph& g, std::span<const Edge> edges);

inline constexpr int brute_force_edge_budget = 24;

// Exhaustive branch-on-edge search. Throws budget_exceeded_error when the
// number of edges exceeds max_edges.
Matching brute_force_max_weight_matching(const Graph& g, std::span<const Weight> edge_weights,
                                         int max_edges = brute_force_edge_budget);
int brute_force_max_cardinality(const Graph& g, std::span<const Edge> subset,
                                int max_edges = brute_force_edge_budget);

}  // namespace mwist
