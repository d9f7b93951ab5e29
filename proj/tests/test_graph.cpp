#include <random>
#include <sstream>

#include "doctest.h"
#include "mwist/error.hpp"
#include "mwist/graph.hpp"
#include "mwist/graph_io.hpp"
#include "test_util.hpp"

using namespace mwist;
using namespace mwist::testing;

TEST_CASE("internal weight of small trees") {
  auto p3 = path_graph({1, 5, 2});
  CHECK(internal_weight(p3, SpanningTree{p3.edges()}) == 5);
  auto k2 = path_graph({3, 4});
  CHECK(internal_weight(k2, SpanningTree{k2.edges()}) == 0);
  auto star = star_graph(9, {1, 1, 1});
  CHECK(internal_weight(star, SpanningTree{star.edges()}) == 9);
}

TEST_CASE("internal weight rejects non-trees") {
  auto tri = complete_graph({1, 1, 1});
  CHECK_THROWS_AS(internal_weight(tri, SpanningTree{tri.edges()}), invalid_tree_error);
  CHECK_THROWS_AS(internal_weight(tri, SpanningTree{{{0, 1}}}), invalid_tree_error);
  auto p3 = path_graph({1, 1, 1});
  CHECK_THROWS_AS(internal_weight(p3, SpanningTree{{{0, 1}, {0, 2}}}), invalid_tree_error);
}

TEST_CASE("spanning tree and connectivity predicates") {
  Graph two({1, 1, 1, 1}, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
  auto tri = complete_graph({1, 2, 3});
  std::vector<Edge> minus{{0, 1}, {1, 2}};
  CHECK(is_spanning_tree(tri, minus));
  CHECK_FALSE(is_spanning_tree(tri, tri.edges()));
}

TEST_CASE("lifted edge weights") {
  auto tri = complete_graph({3, 2, 1});
  auto lw = lift_edge_weights(tri);
  // edges sorted: (0,1) (0,2) (1,2)
  CHECK(lw == std::vector<Weight>{5, 4, 3});
  Graph z({0, 0}, {{0, 1}});
  CHECK(lift_edge_weights(z)[0] == 0);
}

TEST_CASE("claw detection") {
  auto claw = star_graph(0, {0, 0, 0});
  auto r = check_claw_free(claw);
  CHECK_FALSE(r.claw_free);
  REQUIRE(r.witness);
  CHECK(r.witness->center == 0);
  CHECK(r.witness->leaves == std::array<Vertex, 3>{1, 2, 3});
  CHECK(is_claw_free(complete_graph({1, 1, 1})));
}

TEST_CASE("claw check agrees with exhaustive triples") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 9);
    auto g = random_connected(rng, n, static_cast<int>(rng() % (n * 2)), 5);
    bool brute = true;
    for (Vertex c = 0; c < n && brute; ++c) {
      auto nb = g.neighbors(c);
      for (std::size_t i = 0; i < nb.size() && brute; ++i)
        for (std::size_t j = i + 1; j < nb.size() && brute; ++j)
          for (std::size_t k = j + 1; k < nb.size() && brute; ++k)
            if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
              brute = false;
    }
    CHECK(is_claw_free(g) == brute);
  }
}

TEST_CASE("internal weight equals total minus leaves and survives relabeling") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    int n = 3 + static_cast<int>(rng() % 6);
    auto g = random_connected(rng, n, 0, 9);  // a tree
    SpanningTree t{g.edges()};
    auto deg = tree_degrees(n, t.edges);
    Weight leaves = 0;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) leaves += g.weight(v);
    CHECK(internal_weight(g, t) == g.total_weight() - leaves);

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Weight> w(n);
    for (int v = 0; v < n; ++v) w[perm[v]] = g.weight(v);
    std::vector<Edge> es;
    for (auto e : g.edges()) es.push_back(make_edge(perm[e.u], perm[e.v]));
    Graph h(w, es);
    CHECK(internal_weight(h, SpanningTree{h.edges()}) == internal_weight(g, t));
  }
}

TEST_CASE("leaf normalization") {
  auto p3 = path_graph({4, 5, 6});
  auto norm = normalize_leaves(p3);
  CHECK(norm.graph.weights() == std::vector<Weight>{0, 5, 0});
  CHECK(norm.removed_weight == 10);
}

TEST_CASE("text format round trip and comments") {
  std::string text = "# a comment\n3 2\n\n1\n5 # trailing\n2\n0 1\n1 2\n";
  auto g = parse_graph(text);
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.weight(1) == 5);
  auto again = parse_graph(graph_to_string(g, {"x"}));
  CHECK(again.edges() == g.edges());
  CHECK(again.weights() == g.weights());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_graph(std::string("")), parse_error);
  CHECK_THROWS_AS(parse_graph(std::string("2 1\n1\n")), parse_error);
  CHECK_THROWS_AS(parse_graph(std::string("2 1\n1\n1\n0 0\n")), parse_error);
  CHECK_THROWS_AS(parse_graph(std::string("2 1\n1\n-1\n0 1\n")), parse_error);
  CHECK_THROWS_AS(parse_graph(std::string("2 1\n1\n1\n0 5\n")), parse_error);
  CHECK_THROWS_AS(parse_graph(std::string("2 2\n1\n1\n0 1\n1 0\n")), parse_error);
  CHECK_THROWS_AS(parse_graph(std::string("2 1\n1\n1\n0 1\n0 1\n")), parse_error);
  CHECK_THROWS_AS(parse_graph(std::string("2 1\nx\n1\n0 1\n")), parse_error);
}
