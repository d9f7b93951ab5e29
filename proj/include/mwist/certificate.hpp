#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mwist/graph.hpp"

namespace mwist {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Rational&) const = default;
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline constexpr Rational ratio_half{1, 2};
inline constexpr Rational ratio_seven_twelfths{7, 12};
inline constexpr Rational ratio_exact{1, 1};

// A proven bound w(T) >= ratio * upper_bound, where upper_bound >= OPT.
struct RatioCertificate {
  Weight tree_weight = 0;
  Weight matching_weight = 0;  // w(M*) of the graph the bound is stated on
  Weight upper_bound = 0;      // bound on OPT for the instance itself
  Rational ratio = ratio_half;
  std::optional<Weight> optimum;

  bool holds() const {
    return static_cast<__int128>(ratio.den) * tree_weight >=
           static_cast<__int128>(ratio.num) * upper_bound;
  }
  // Certified ratio as the exact pair (w(T), bound).
  Rational achieved() const { return {tree_weight, upper_bound}; }
};

}  // namespace mwist
