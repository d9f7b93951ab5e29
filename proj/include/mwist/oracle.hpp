#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "mwist/graph.hpp"

namespace mwist {

struct OracleBudget {
  int max_vertices = 10;
  std::int64_t max_trees = 10'000'000;
};

struct ExactResult {
  Weight opt = 0;
  SpanningTree tree;
  std::int64_t trees_enumerated = 0;
};

// Visitor receives the tree edges and the degree of every vertex.
using TreeVisitor = std::function<void(std::span<const Edge>, std::span<const int>)>;

// Include/exclude recursion over edges in index order with connectivity
// pruning; every spanning tree is produced exactly once. Returns the count.
// Throws budget_exceeded_error past max_trees or max_vertices, and
// disconnected_error on a disconnected graph.
std::int64_t enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit,
                                      const OracleBudget& budget = {});

ExactResult exact_mwist(const Graph& g, const OracleBudget& budget = {});

// Kirchhoff count via a fraction-free determinant.
std::int64_t count_spanning_trees(const Graph& g);

}  // namespace mwist
