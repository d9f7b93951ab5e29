#include <random>
#include <set>

#include "doctest.h"
#include "mwist/error.hpp"
#include "mwist/matching.hpp"
#include "mwist/oracle.hpp"
#include "test_util.hpp"

using namespace mwist;
using namespace mwist::testing;

TEST_CASE("exact optimum on fixtures") {
  CHECK(exact_mwist(path_graph({0, 5, 0})).opt == 5);
  auto tri = exact_mwist(complete_graph({3, 2, 1}));
  CHECK(tri.opt == 3);
  CHECK(tri.trees_enumerated == 3);
  auto k4 = exact_mwist(complete_graph({1, 1, 1, 1}));
  CHECK(k4.opt == 2);
  CHECK(k4.trees_enumerated == 16);
}

TEST_CASE("tree counts") {
  auto noop = [](std::span<const Edge>, std::span<const int>) {};
  CHECK(enumerate_spanning_trees(complete_graph({0, 0, 0}), noop) == 3);
  CHECK(enumerate_spanning_trees(complete_graph({0, 0, 0, 0}), noop) == 16);
  CHECK(enumerate_spanning_trees(cycle_graph({0, 0, 0, 0, 0}), noop) == 5);
  CHECK(count_spanning_trees(complete_graph(std::vector<Weight>(6, 0))) == 1296);
}

TEST_CASE("enumeration matches the matrix-tree count and yields distinct trees") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 150; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto g = random_connected(rng, n, static_cast<int>(rng() % 12), 3);
    std::set<std::vector<Edge>> seen;
    auto count = enumerate_spanning_trees(g, [&](std::span<const Edge> es, std::span<const int>) {
      std::vector<Edge> t(es.begin(), es.end());
      CHECK(is_spanning_tree(g, t));
      seen.insert(t);
    });
    CHECK(count == count_spanning_trees(g));
    CHECK(static_cast<std::int64_t>(seen.size()) == count);
  }
}

TEST_CASE("oracle budgets") {
  auto big = complete_graph(std::vector<Weight>(11, 1));
  CHECK_THROWS_AS(exact_mwist(big), budget_exceeded_error);
  auto k7 = complete_graph(std::vector<Weight>(7, 1));
  CHECK_THROWS_AS(exact_mwist(k7, {10, 100}), budget_exceeded_error);
  Graph two({1, 1, 1, 1}, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(exact_mwist(two), disconnected_error);
}

TEST_CASE("optimum never exceeds the matching bound") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto g = random_connected(rng, n, static_cast<int>(rng() % 10), 30);
    auto norm = normalize_leaves(g);
    CHECK(exact_mwist(g).opt <= max_weight_matching(norm.graph).weight);
  }
}
