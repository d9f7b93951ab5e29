#pragma once

#include <string>
#include <vector>

#include "mwist/approx_half.hpp"
#include "mwist/graph.hpp"
#include "mwist/matching.hpp"

namespace mwist {

enum class ComponentType : std::uint8_t { I, II, III, IV, V, VI, Trivial };

std::string to_string(ComponentType t);

// A component of H3.
//
// core holds pair indices: I = {j1, j2} with adjacent heads; II = {j1, j2, j3}
// with j2 in the middle of the head path; III = {j1}; IV = {j1, j2}; both
// joined through x. VI lists the cycle in order, pair core[i]'s head being
// adjacent in the cycle to the tail of core[i+1].
//
// attached[i] is the type-V path hanging off the tail of core[i], listed from
// the pair whose head touches that tail outwards. Its last pair carries the
// replacement tail.
struct ComponentView {
  ComponentType type = ComponentType::Trivial;
  std::vector<int> core;
  std::vector<std::vector<int>> attached;
  Vertex x = no_vertex;
  std::vector<int> mstar_pairs;  // ascending
  std::vector<Vertex> vertices;  // ascending
  std::vector<Edge> edges;       // H3 edges inside, sorted
  Weight mstar_weight = 0;

  // b^i and a^i of the text: the replacement tail of leg i and its head.
  Vertex leg_tail(const AbxPartition& p, int i) const;
  Vertex leg_head(const AbxPartition& p, int i) const;
};

struct Stages {
  Matching mstar;
  AbxPartition part;
  EdgeSet maa, naa, nax, mab, nab;
  EdgeSet h3;
  std::vector<ComponentView> components;
  std::vector<int> component_of;  // per vertex
};

// E(A, A) for the claw-free construction, in contrast to E(A, A u X).
std::vector<Edge> eaa_claw(const Graph& g, const AbxPartition& part);

// Builds H0..H3 and classifies components. Throws claw_violation_error when a
// structural guarantee that claw-freeness provides does not hold.
Stages build_stages(const Graph& g, const Matching& mstar);

}  // namespace mwist
