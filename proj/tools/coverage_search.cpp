// Random search for claw-free instances that reach settle cases not yet
// covered. Writes the first hit per case to <dir>/<case>.txt.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "mwist/clawfree.hpp"
#include "mwist/error.hpp"
#include "mwist/gen.hpp"
#include "mwist/graph_io.hpp"
#include "mwist/operation1.hpp"

using namespace mwist;

namespace {

std::vector<Weight> weights(int n, std::mt19937_64& rng) {
  std::vector<Weight> w(n);
  const int mode = static_cast<int>(rng() % 5);
  for (auto& x : w) {
    switch (mode) {
      case 0: x = static_cast<Weight>(rng() % 4); break;
      case 1: x = static_cast<Weight>(rng() % 10); break;
      case 2: x = rng() % 3 == 0 ? 0 : static_cast<Weight>(1 + rng() % 20); break;
      case 3: x = rng() % 2 == 0 ? 0 : static_cast<Weight>(1 + rng() % 3); break;
      default: x = static_cast<Weight>(1 + rng() % 100); break;
    }
  }
  return w;
}

// unit interval graph: claw-free
Graph interval(int n, std::mt19937_64& rng) {
  std::vector<double> x(n);
  for (auto& v : x) v = std::uniform_real_distribution<double>(0, n / 2.5)(rng);
  std::sort(x.begin(), x.end());
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && x[j] - x[i] <= 1.0; ++j) es.push_back({i, j});
  return Graph(weights(n, rng), es);
}

// edge toggles from a cycle, keeping the graph connected and claw-free
Graph toggled(int n, std::mt19937_64& rng) {
  std::set<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.insert(std::minmax(i, (i + 1) % n));
  auto build = [&] {
    std::vector<Edge> v;
    for (auto [a, b] : es) v.push_back({a, b});
    return Graph(std::vector<Weight>(n, 1), v);
  };
  const int steps = static_cast<int>(rng() % (3 * n));
  for (int s = 0; s < steps; ++s) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b) continue;
    auto e = std::minmax(a, b);
    const bool had = es.count(e) > 0;
    if (had) es.erase(e); else es.insert(e);
    Graph g = build();
    if (!is_connected(g) || !is_claw_free(g)) {
      if (had) es.insert(e); else es.erase(e);
    }
  }
  Graph g = build();
  return Graph(weights(n, rng), g.edges());
}

Graph line(int n, std::mt19937_64& rng) {
  GenSpec s;
  s.family = Family::line_graph;
  s.n = n;
  const int most = n * (n - 1) / 2;
  s.m = n - 1 + static_cast<int>(rng() % (most - n + 2));
  s.seed = rng();
  Graph g = generate(s);
  return Graph(weights(g.n(), rng), g.edges());
}

}  // namespace

int main(int argc, char** argv) {
  const long iters = argc > 1 ? std::atol(argv[1]) : 100000;
  const std::filesystem::path dir = argc > 2 ? argv[2] : "coverage";
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(seed);
  std::map<std::string, long> hits;
  for (const auto& c : settle_top_level_cases()) hits[c] = 0;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    hits[f.path().stem().string()] += 0;
  long failures = 0, rescues = 0;
  std::map<std::string, long> rescued_in;
  for (long it = 0; it < iters; ++it) {
    const int kind = static_cast<int>(rng() % 3);
    Graph g = kind == 0   ? line(3 + static_cast<int>(rng() % 6), rng)
              : kind == 1 ? interval(5 + static_cast<int>(rng() % 10), rng)
                          : toggled(5 + static_cast<int>(rng() % 9), rng);
    if (!is_connected(g)) continue;
    try {
      const auto r = approx_7_12(g);
      rescues += r.rescues;
      for (const auto& b : r.branches) {
        const auto c = top_level_case(b);
        if (b.ends_with(".rescue")) ++rescued_in[c];
        if (hits[c]++ == 0) {
          const auto p = dir / (c + ".txt");
          if (!std::filesystem::exists(p)) {
            save_graph(p.string(), g);
            std::cout << "found " << c << " at " << it << "\n";
          }
        }
      }
    } catch (const std::exception& e) {
      if (failures++ < 5) {
        std::cout << "failure at " << it << ": " << e.what() << "\n";
        save_graph((dir / ("failure_" + std::to_string(it) + ".txt")).string(), g);
      }
    }
  }
  std::cout << "failures " << failures << " rescues " << rescues << "\n";
  for (const auto& [c, n] : hits) std::cout << c << " " << n << "\n";
  for (const auto& [c, n] : rescued_in) std::cout << "rescued in " << c << ": " << n << "\n";
  return failures == 0 ? 0 : 1;
}
