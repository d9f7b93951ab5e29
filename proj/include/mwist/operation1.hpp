#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mwist/graph.hpp"

namespace mwist {

// A cut vertex v and a component of G - v with 2 to 4 vertices.
struct SmallCut {
  Vertex cut_vertex = no_vertex;
  std::vector<Vertex> component;  // ascending
};

// One reduction step. Ids in cut_vertex, removed_vertices and local_tree refer
// to the graph before the step; added_stub refers to the graph after it.
struct ReductionRecord {
  Vertex cut_vertex = no_vertex;
  std::vector<Vertex> removed_vertices;
  Weight tw = 0;
  std::vector<Edge> local_tree;  // spans removed_vertices + cut_vertex
  Vertex added_stub = no_vertex;
  std::vector<Vertex> to_previous;  // new id -> old id, no_vertex for the stub
};

struct Reduction {
  Graph graph;
  std::vector<ReductionRecord> records;
  Weight total_tw = 0;
};

// First configuration in scan order: cut vertices ascending, then components
// of G - v ordered by their smallest vertex.
std::optional<SmallCut> find_small_cut(const Graph& g);

// Every (v, component) pair present in g right now, in scan order.
std::vector<SmallCut> small_cuts(const Graph& g);

// Best internal weight of a spanning tree of G[C + v] with w(v) read as 0,
// together with a tree realizing it (original ids).
std::pair<Weight, std::vector<Edge>> hanging_weight(const Graph& g, const SmallCut& cut);

// Applies one step. The kept vertices keep their relative order and the stub
// is appended last.
std::pair<Graph, ReductionRecord> reduce_once(const Graph& g, const SmallCut& cut);

// Repeats until no configuration is left. g must be connected.
Reduction apply_operation1(const Graph& g);

// Maps a spanning tree of the fully reduced graph back to the input graph by
// splicing the local trees in reverse order.
SpanningTree undo_operation1(const SpanningTree& reduced_tree,
                             std::span<const ReductionRecord> records);

}  // namespace mwist
