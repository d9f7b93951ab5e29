#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mwist/graph.hpp"

namespace mwist {

enum class Family : std::uint8_t { random_gnm, line_graph, planted_hangers, path, cycle, star };

inline constexpr Family all_families[] = {Family::random_gnm,      Family::line_graph,
                                          Family::planted_hangers, Family::path,
                                          Family::cycle,           Family::star};

std::string to_string(Family f);
Family parse_family(const std::string& s);  // throws error

struct WeightDist {
  enum class Kind : std::uint8_t { uniform, zipf, zero_heavy };
  Kind kind = Kind::uniform;
  Weight lo = 0, hi = 9;  // uniform
  double s = 1.0;         // zipf exponent on [1, 100]
  double p = 0.5;         // zero_heavy: P(w = 0), otherwise U[1, 20]
};

// "uniform:lo:hi", "zipf:s", "zeroheavy:p". Throws error.
WeightDist parse_weights(const std::string& s);
std::string to_string(const WeightDist& d);

// For line_graph, n and m describe the base graph; the instance is its line
// graph. path, cycle and star ignore m.
struct GenSpec {
  Family family = Family::random_gnm;
  int n = 8;
  int m = 10;
  WeightDist weights;
  std::uint64_t seed = 1;
};

inline constexpr int max_generation_retries = 64;

std::uint64_t splitmix64(std::uint64_t x);
// Seed of instance i in a batch started from seed.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t i) {
  return splitmix64(seed ^ splitmix64(i + 1));
}

// Deterministic in spec. Throws error on an invalid spec and
// retries_exhausted_error when no acceptable graph turns up.
Graph generate(const GenSpec& spec);

// Connected G(n, m): a random labelled spanning tree plus uniform extra edges.
std::vector<Edge> random_connected_edges(int n, int m, std::mt19937_64& rng);
Graph line_graph(int n, std::span<const Edge> base, std::span<const Weight> weights);

}  // namespace mwist
