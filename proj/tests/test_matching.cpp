#include <random>

#include "doctest.h"
#include "mwist/error.hpp"
#include "mwist/matching.hpp"
#include "test_util.hpp"

using namespace mwist;
using namespace mwist::testing;

TEST_CASE("weighted matching on small graphs") {
  auto tri = complete_graph({3, 2, 1});
  auto m = max_weight_matching(tri);
  CHECK(m.weight == 5);
  CHECK(m.edges == std::vector<Edge>{{0, 1}});

  auto p4 = path_graph({0, 5, 5, 0});
  auto m4 = max_weight_matching(p4);
  CHECK(m4.weight == 10);
  CHECK(m4.edges == std::vector<Edge>{{1, 2}});

  auto zero = complete_graph({0, 0, 0, 0});
  CHECK(max_weight_matching(zero).weight == 0);
}

TEST_CASE("brute-force matching fixtures") {
  auto tri = complete_graph({3, 2, 1});
  CHECK(brute_force_max_weight_matching(tri, lift_edge_weights(tri)).weight == 5);
  auto p4 = path_graph({0, 5, 5, 0});
  CHECK(brute_force_max_weight_matching(p4, lift_edge_weights(p4)).weight == 10);
  Graph empty({1, 2}, {});
  CHECK(brute_force_max_weight_matching(empty, {}).weight == 0);
  Graph single({3, 4}, {{0, 1}});
  auto s = brute_force_max_weight_matching(single, lift_edge_weights(single));
  CHECK(s.weight == 7);
  CHECK(s.edges.size() == 1);
  auto big = complete_graph(std::vector<Weight>(8, 1));
  CHECK_THROWS_AS(brute_force_max_weight_matching(big, lift_edge_weights(big)), budget_exceeded_error);
}

TEST_CASE("cardinality matching") {
  auto p4 = path_graph({1, 1, 1, 1});
  CHECK(max_cardinality_matching(p4, p4.edges()).edges.size() == 2);
  auto tri = complete_graph({1, 1, 1});
  CHECK(max_cardinality_matching(tri, tri.edges()).edges.size() == 1);
  CHECK(max_cardinality_matching(tri, {}).edges.empty());
}

TEST_CASE("blossom needed for cardinality") {
  // Odd cycle 0-1-2-3-4 with pendant 5 on 0 and 6 on 2: perfect matching on 6
  // of the 7 vertices requires passing through the blossom.
  Graph g(std::vector<Weight>(7, 1), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {2, 6}});
  CHECK(max_cardinality_matching(g, g.edges()).edges.size() == 3);
}

TEST_CASE("weighted and cardinality agree with brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 1500; ++it) {
    int n = 2 + static_cast<int>(rng() % 9);
    int max_extra = std::min(20 - (n - 1), n * (n - 1) / 2 - (n - 1));
    auto g = random_connected(rng, n, max_extra > 0 ? static_cast<int>(rng() % (max_extra + 1)) : 0,
                              (it % 3 == 0) ? 3 : 50);
    std::vector<Weight> ew(g.m());
    for (auto& w : ew) w = static_cast<Weight>(rng() % 40);
    auto fast = max_weight_matching(g, ew);
    auto slow = brute_force_max_weight_matching(g, ew);
    CHECK(is_matching(g, fast.edges));
    REQUIRE(fast.weight == slow.weight);
    auto lifted = max_weight_matching(g);
    CHECK(lifted.weight == brute_force_max_weight_matching(g, lift_edge_weights(g)).weight);
    auto card = max_cardinality_matching(g, g.edges());
    CHECK(is_matching(g, card.edges));
    CHECK(static_cast<int>(card.edges.size()) == brute_force_max_cardinality(g, g.edges()));
  }
}

TEST_CASE("adding an edge never lowers the optimum") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 200; ++it) {
    int n = 4 + static_cast<int>(rng() % 6);
    auto g = random_connected(rng, n, 2, 20);
    std::vector<Edge> es = g.edges();
    Edge extra{0, 0};
    for (int a = 0; a < n && extra.u == extra.v; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!g.has_edge(a, b)) {
          extra = {a, b};
          break;
        }
    if (extra.u == extra.v) continue;
    es.push_back(extra);
    Graph h(g.weights(), es);
    CHECK(max_weight_matching(h).weight >= max_weight_matching(g).weight);
  }
}
