#pragma once

#include <span>
#include <string>
#include <vector>

#include "mwist/certificate.hpp"
#include "mwist/graph.hpp"
#include "mwist/settle.hpp"
#include "mwist/stages.hpp"

namespace mwist {

// Joins the settled component trees. Components go by descending w(C n M*),
// ties by id; an outward edge is used when it joins two different trees,
// otherwise the component falls back to fallback_edges. The rest is joined
// with the lowest edges that close no cycle.
SpanningTree interconnect(const Graph& g, std::span<const SettledTree> settled);

struct ClawFreeResult {
  SpanningTree tree;                // on the input graph
  RatioCertificate certificate;     // stated on the input graph
  Weight normalization_delta = 0;
  int reductions = 0;               // reduction steps applied
  Weight total_tw = 0;
  Weight reduced_tree_weight = 0;
  Weight mstar_reduced = 0;
  bool used_oracle = false;         // reduced graph had fewer than 5 vertices
  std::vector<std::string> branches;  // one per non-trivial component
  int rescues = 0;
};

// Throws not_claw_free_error, disconnected_error, claw_violation_error,
// case_exhaustion_error or certificate_violation_error.
ClawFreeResult approx_7_12(const Graph& g);

}  // namespace mwist
