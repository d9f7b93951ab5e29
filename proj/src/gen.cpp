#include "mwist/gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mwist/error.hpp"
#include "mwist/operation1.hpp"

namespace mwist {

std::string to_string(Family f) {
  switch (f) {
    case Family::random_gnm: return "random_gnm";
    case Family::line_graph: return "line_graph";
    case Family::planted_hangers: return "planted_hangers";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : all_families)
    if (to_string(f) == s) return f;
  throw error("unknown family '" + s + "'");
}

WeightDist parse_weights(const std::string& s) {
  auto parts = std::vector<std::string>{};
  std::size_t i = 0;
  while (true) {
    auto j = s.find(':', i);
    parts.push_back(s.substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  WeightDist d;
  try {
    if (parts[0] == "uniform" && parts.size() == 3) {
      d.kind = WeightDist::Kind::uniform;
      d.lo = std::stoll(parts[1]);
      d.hi = std::stoll(parts[2]);
      if (d.lo < 0 || d.hi < d.lo) throw error("uniform needs 0 <= lo <= hi");
      return d;
    }
    if (parts[0] == "zipf" && parts.size() == 2) {
      d.kind = WeightDist::Kind::zipf;
      d.s = std::stod(parts[1]);
      if (!(d.s > 0)) throw error("zipf needs s > 0");
      return d;
    }
    if (parts[0] == "zeroheavy" && parts.size() == 2) {
      d.kind = WeightDist::Kind::zero_heavy;
      d.p = std::stod(parts[1]);
      if (!(d.p >= 0 && d.p <= 1)) throw error("zeroheavy needs 0 <= p <= 1");
      return d;
    }
  } catch (const std::logic_error&) {
  }
  throw error("bad weight distribution '" + s + "'");
}

std::string to_string(const WeightDist& d) {
  switch (d.kind) {
    case WeightDist::Kind::uniform:
      return "uniform:" + std::to_string(d.lo) + ":" + std::to_string(d.hi);
    case WeightDist::Kind::zipf: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "zipf:%g", d.s);
      return buf;
    }
    case WeightDist::Kind::zero_heavy: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "zeroheavy:%g", d.p);
      return buf;
    }
  }
  return "?";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

// Bounded draws without relying on distribution objects, whose output is
// library specific.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % k);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % k;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Weight> draw_weights(int n, const WeightDist& d, std::mt19937_64& rng) {
  std::vector<Weight> w(n);
  std::vector<double> cdf;
  if (d.kind == WeightDist::Kind::zipf) {
    double acc = 0;
    for (int k = 1; k <= 100; ++k) cdf.push_back(acc += std::pow(k, -d.s));
    for (auto& c : cdf) c /= acc;
  }
  for (auto& x : w) {
    switch (d.kind) {
      case WeightDist::Kind::uniform:
        x = d.lo + static_cast<Weight>(below(rng, static_cast<std::uint64_t>(d.hi - d.lo) + 1));
        break;
      case WeightDist::Kind::zipf:
        x = 1 + (std::lower_bound(cdf.begin(), cdf.end() - 1, unit(rng)) - cdf.begin());
        break;
      case WeightDist::Kind::zero_heavy:
        x = unit(rng) < d.p ? 0 : 1 + static_cast<Weight>(below(rng, 20));
        break;
    }
  }
  return w;
}

void check_counts(int n, int m) {
  if (n < 1) throw error("n must be at least 1");
  const long long most = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > most)
    throw error("m = " + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " +
                std::to_string(most) + "]");
}

// Hangs 2 to 4 new vertices on v as a triangle, diamond or pentagon-like
// block; the block only touches v.
void plant(int& n, std::vector<Edge>& edges, Vertex v, std::mt19937_64& rng) {
  const int k = 2 + static_cast<int>(below(rng, 3));
  std::vector<Vertex> c;
  for (int i = 0; i < k; ++i) c.push_back(n++);
  // path through the new vertices, closed through v; chords at random
  Vertex prev = v;
  for (Vertex x : c) {
    edges.push_back(make_edge(prev, x));
    prev = x;
  }
  edges.push_back(make_edge(prev, v));
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j)
      if (below(rng, 2)) edges.push_back(make_edge(c[i], c[j]));
  for (int i = 1; i + 1 < k; ++i)
    if (below(rng, 2)) edges.push_back(make_edge(v, c[i]));
}

}  // namespace

std::vector<Edge> random_connected_edges(int n, int m, std::mt19937_64& rng) {
  check_counts(n, m);
  std::set<Edge> es;
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[below(rng, i + 1)]);
  for (int i = 1; i < n; ++i) es.insert(make_edge(order[i], order[below(rng, i)]));
  const long long most = static_cast<long long>(n) * (n - 1) / 2;
  if (2LL * m > most) {
    // dense: sample the complement
    std::vector<Edge> rest;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!es.count({u, v})) rest.push_back({u, v});
    for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[below(rng, i)]);
    for (std::size_t i = 0; static_cast<int>(es.size()) < m; ++i) es.insert(rest[i]);
  } else {
    while (static_cast<int>(es.size()) < m) {
      Vertex u = static_cast<Vertex>(below(rng, n)), v = static_cast<Vertex>(below(rng, n));
      if (u != v) es.insert(make_edge(u, v));
    }
  }
  return {es.begin(), es.end()};
}

Graph line_graph(int n, std::span<const Edge> base, std::span<const Weight> weights) {
  std::vector<std::vector<int>> at(n);
  for (int i = 0; i < static_cast<int>(base.size()); ++i) {
    at[base[i].u].push_back(i);
    at[base[i].v].push_back(i);
  }
  std::set<Edge> es;
  for (const auto& inc : at)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) es.insert(make_edge(inc[a], inc[b]));
  return Graph({weights.begin(), weights.end()}, {es.begin(), es.end()});
}

Graph generate(const GenSpec& spec) {
  std::mt19937_64 rng(splitmix64(spec.seed));
  const int n = spec.n;
  switch (spec.family) {
    case Family::path:
    case Family::star:
    case Family::cycle: {
      if (n < 1) throw error("n must be at least 1");
      if (spec.family == Family::cycle && n < 3) throw error("a cycle needs n >= 3");
      std::vector<Edge> es;
      for (int i = 1; i < n; ++i)
        es.push_back(spec.family == Family::star ? Edge{0, i} : Edge{i - 1, i});
      if (spec.family == Family::cycle) es.push_back({0, n - 1});
      std::sort(es.begin(), es.end());
      return Graph(draw_weights(n, spec.weights, rng), es);
    }
    case Family::random_gnm:
      return Graph(draw_weights(n, spec.weights, rng), random_connected_edges(n, spec.m, rng));
    case Family::line_graph: {
      if (spec.m < 1) throw error("line graph needs a base graph with an edge");
      auto base = random_connected_edges(n, spec.m, rng);
      return line_graph(n, base, draw_weights(spec.m, spec.weights, rng));
    }
    case Family::planted_hangers: {
      check_counts(n, spec.m);
      if (n < 2) throw error("planted_hangers needs n >= 2");
      for (int attempt = 0; attempt < max_generation_retries; ++attempt) {
        auto es = random_connected_edges(n, spec.m, rng);
        int total = n;
        const int hangers = 1 + static_cast<int>(below(rng, 2));
        for (int h = 0; h < hangers; ++h)
          plant(total, es, static_cast<Vertex>(below(rng, n)), rng);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        Graph g(draw_weights(total, spec.weights, rng), es);
        if (find_small_cut(g)) return g;
      }
      throw retries_exhausted_error("no reducible configuration after " +
                                    std::to_string(max_generation_retries) + " attempts");
    }
  }
  throw error("unknown family");
}

}  // namespace mwist
