#include "mwist/clawfree.hpp"

#include <algorithm>
#include <numeric>

#include "mwist/approx_half.hpp"
#include "mwist/error.hpp"
#include "mwist/matching.hpp"
#include "mwist/operation1.hpp"
#include "mwist/oracle.hpp"
#include "mwist/union_find.hpp"

namespace mwist {

SpanningTree interconnect(const Graph& g, std::span<const SettledTree> settled) {
  UnionFind uf(g.n());
  for (const auto& t : settled)
    for (const auto& e : t.tree_edges) uf.unite(e.u, e.v);

  std::vector<int> order(settled.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return settled[a].mstar_weight > settled[b].mstar_weight;
  });
  std::vector<Edge> forest;
  for (int i : order) {
    const auto& t = settled[i];
    if (t.outward_edge && uf.unite(t.outward_edge->u, t.outward_edge->v)) {
      forest.insert(forest.end(), t.tree_edges.begin(), t.tree_edges.end());
      forest.push_back(*t.outward_edge);
    } else {
      forest.insert(forest.end(), t.fallback_edges.begin(), t.fallback_edges.end());
    }
  }
  return connect_edges(g, forest);
}

ClawFreeResult approx_7_12(const Graph& g) {
  if (!is_connected(g)) throw disconnected_error("graph is disconnected");
  auto norm = normalize_leaves(g);
  const auto claw = check_claw_free(norm.graph);
  if (!claw.claw_free) {
    const auto& c = *claw.witness;
    throw not_claw_free_error("claw centred at " + std::to_string(c.center) + " with leaves " +
                              std::to_string(c.leaves[0]) + ", " + std::to_string(c.leaves[1]) +
                              ", " + std::to_string(c.leaves[2]));
  }
  ClawFreeResult r;
  r.normalization_delta = norm.removed_weight;
  auto red = apply_operation1(norm.graph);
  r.reductions = static_cast<int>(red.records.size());
  r.total_tw = red.total_tw;
  const Graph& h = red.graph;

  SpanningTree reduced;
  auto& cert = r.certificate;
  if (h.n() < 5) {
    // the bound against w(M*) is false below five vertices (K4), the
    // optimum is cheap instead
    auto ex = exact_mwist(h);
    reduced = ex.tree;
    r.used_oracle = true;
    r.mstar_reduced = max_weight_matching(h).weight;
    cert.ratio = ratio_exact;
    cert.matching_weight = r.mstar_reduced;
    cert.upper_bound = ex.opt + red.total_tw;
    cert.optimum = cert.upper_bound;
  } else {
    const auto mstar = max_weight_matching(h);
    const auto stages = build_stages(h, mstar);
    std::vector<SettledTree> settled;
    settled.reserve(stages.components.size());
    for (int i = 0; i < static_cast<int>(stages.components.size()); ++i) {
      settled.push_back(settle(h, stages, i));
      if (stages.components[i].type != ComponentType::Trivial)
        r.branches.push_back(settled.back().branch);
      r.rescues += settled.back().rescued;
    }
    reduced = interconnect(h, settled);
    r.mstar_reduced = mstar.weight;
    cert.ratio = ratio_seven_twelfths;
    cert.matching_weight = mstar.weight;
    cert.upper_bound = mstar.weight + red.total_tw;
  }
  r.reduced_tree_weight = internal_weight(h, reduced);
  if (!r.used_oracle &&
      12 * static_cast<__int128>(r.reduced_tree_weight) < 7 * static_cast<__int128>(r.mstar_reduced))
    throw certificate_violation_error(
        "12*w(T) = " + std::to_string(12 * r.reduced_tree_weight) +
        " < 7*w(M*) = " + std::to_string(7 * r.mstar_reduced) + " on the reduced graph");

  r.tree = undo_operation1(reduced, red.records);
  cert.tree_weight = internal_weight(g, r.tree);
  if (!cert.holds())
    throw certificate_violation_error("w(T) = " + std::to_string(cert.tree_weight) +
                                      " below " + cert.ratio.str() + " of " +
                                      std::to_string(cert.upper_bound));
  return r;
}

}  // namespace mwist
