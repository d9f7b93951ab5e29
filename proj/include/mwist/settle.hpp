#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwist/graph.hpp"
#include "mwist/stages.hpp"

namespace mwist {

// A component converted into a tree on its own vertices, possibly with one
// edge from a leaf to a vertex outside the component.
struct SettledTree {
  int component = -1;
  std::vector<Vertex> vertices;
  EdgeSet tree_edges;
  std::optional<Edge> outward_edge;
  Vertex designated_leaf = no_vertex;
  Weight internal = 0;  // inside the component tree alone
  Weight counted = 0;   // internal plus the designated leaf
  Weight mstar_weight = 0;
  // Used when the outward edge would close a cycle: the better of the plain
  // H3 tree and tree_edges, both worth at least half of mstar_weight.
  EdgeSet fallback_edges;
  Weight fallback_internal = 0;
  std::string branch;
  bool rescued = false;  // no case construction worked, the plain tree did

  bool predicate_holds() const {
    return 3 * static_cast<__int128>(counted) >= 2 * static_cast<__int128>(mstar_weight);
  }
};

// Throws case_exhaustion_error when nothing qualifies and claw_violation_error
// when a configuration that claw-freeness rules out shows up.
SettledTree settle(const Graph& g, const Stages& s, int component);

// "II.4.2.1.3" -> "II.4"
std::string top_level_case(const std::string& branch);

// Every top-level case id settle can report.
const std::vector<std::string>& settle_top_level_cases();

}  // namespace mwist
