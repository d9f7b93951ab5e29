#include <random>

#include "doctest.h"
#include "mwist/approx_half.hpp"
#include "mwist/oracle.hpp"
#include "test_util.hpp"

using namespace mwist;
using namespace mwist::testing;

TEST_CASE("tree to matching fixtures") {
  auto p3 = path_graph({0, 5, 0});
  auto m = tree_to_matching(p3, SpanningTree{p3.edges()});
  CHECK(m.weight >= 5);
  CHECK(m.edges.size() == 1);

  auto star = star_graph(9, {1, 1, 1});
  auto ms = tree_to_matching(star, SpanningTree{star.edges()});
  CHECK(ms.weight == 10);
  CHECK(ms.edges == std::vector<Edge>{{0, 1}});

  auto zero = path_graph({0, 0, 0, 0});
  CHECK(tree_to_matching(zero, SpanningTree{zero.edges()}).weight == 0);
}

TEST_CASE("upper bound certificate fixtures") {
  CHECK(upper_bound_certificate(path_graph({0, 5, 0})) == 5);
  CHECK(upper_bound_certificate(complete_graph({3, 2, 1})) == 5);
  CHECK(upper_bound_certificate(path_graph({3, 4})) == 0);
}

TEST_CASE("partition") {
  auto p4 = path_graph({0, 5, 5, 0});
  auto m = max_weight_matching(p4);
  auto part = partition_abx(p4, m);
  CHECK(part.role[1] == Role::HeadA);
  CHECK(part.role[2] == Role::TailB);
  CHECK(part.is_x(0));
  CHECK(part.is_x(3));

  auto zero = complete_graph({0, 0, 0});
  auto pz = partition_abx(zero, max_weight_matching(zero));
  for (int v = 0; v < 3; ++v) CHECK(pz.is_x(v));

  Graph e({4, 2}, {{0, 1}});
  auto pe = partition_abx(e, max_weight_matching(e));
  CHECK(pe.is_head(0));
  CHECK(pe.is_tail(1));
}

TEST_CASE("H0 shapes") {
  // heads 0 and 2 adjacent; tails 1 and 3
  Graph g({5, 1, 5, 1}, {{0, 1}, {2, 3}, {0, 2}});
  Matching m{{{0, 1}, {2, 3}}, 12};
  auto part = partition_abx(g, m);
  auto s = build_h0(g, part);
  CHECK(s.kept_edges.size() == 3);
  CHECK(s.is_settled(0));
  CHECK(s.mst_edges_in_component(part).size() == 1);

  // no E(A, A u X) edges
  Graph h({5, 1, 5, 1}, {{0, 1}, {2, 3}, {0, 3}});
  auto ph = partition_abx(h, Matching{{{0, 1}, {2, 3}}, 12});
  auto sh = build_h0(h, ph);
  CHECK(sh.kept_edges.size() == 2);
  CHECK(sh.isolated[0]);
  CHECK(sh.isolated[1]);

  // heads 0-2-4 path
  Graph p({5, 1, 5, 1, 5, 1}, {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}});
  auto pp = partition_abx(p, Matching{{{0, 1}, {2, 3}, {4, 5}}, 18});
  auto sp = build_h0(p, pp);
  CHECK(sp.kept_edges.size() == 5);
  CHECK(sp.is_settled(4));
}

TEST_CASE("absorbing two isolated edges into a cycle") {
  // a1=0 b1=1 a2=2 b2=3, a1~b2, a2~b1
  Graph g({6, 1, 5, 1}, {{0, 1}, {2, 3}, {0, 3}, {1, 2}});
  auto part = partition_abx(g, Matching{{{0, 1}, {2, 3}}, 13});
  auto s = build_h0(g, part);
  absorb_isolated(s, g, part);
  CHECK(s.kept_edges.size() == 3);
  CHECK(s.kept_edges.contains({0, 1}));
  CHECK_FALSE(s.kept_edges.contains({2, 3}));  // the lighter pair is cut
  auto t = connect_forest(g, s);
  CHECK(is_spanning_tree(g, t.edges));
}

TEST_CASE("absorb into a settled component and no-op") {
  // settled: heads 0,2 adjacent (tails 1,3); isolated pair 4-5 with head 4 ~ tail 1
  Graph g({5, 1, 5, 1, 4, 0}, {{0, 1}, {2, 3}, {0, 2}, {4, 5}, {1, 4}, {3, 5}});
  auto part = partition_abx(g, Matching{{{0, 1}, {2, 3}, {4, 5}}, 16});
  auto s = build_h0(g, part);
  CHECK(s.isolated[part.pair_of[4]]);
  absorb_isolated(s, g, part);
  CHECK(s.kept_edges.contains({1, 4}));
  CHECK(s.is_settled(4));
  auto before = s.kept_edges;
  absorb_isolated(s, g, part);
  CHECK(s.kept_edges == before);
}

TEST_CASE("connect forest") {
  auto p4 = path_graph({0, 5, 5, 0});
  ForestState s;
  s.kept_edges.insert({0, 1});
  s.kept_edges.insert({2, 3});
  auto t = connect_forest(p4, s);
  CHECK(t.edges == p4.edges());
}

TEST_CASE("approx half fixtures") {
  auto p3 = path_graph({0, 5, 0});
  auto r = approx_half(p3);
  CHECK(r.certificate.tree_weight == 5);
  CHECK(r.certificate.matching_weight == 5);
  CHECK(r.certificate.holds());
  auto zero = complete_graph({0, 0, 0, 0});
  CHECK(approx_half(zero).certificate.tree_weight == 0);
  Graph single({7}, {});
  CHECK(approx_half(single).tree.edges.empty());
}

TEST_CASE("approx half against the oracle") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 400; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto g = random_connected(rng, n, static_cast<int>(rng() % 10), (it % 2) ? 5 : 40);
    auto r = approx_half(g);
    CHECK(is_spanning_tree(g, r.tree.edges));
    CHECK(2 * r.certificate.tree_weight >= r.certificate.matching_weight);
    CHECK(2 * r.certificate.tree_weight >= exact_mwist(g).opt);
  }
}
