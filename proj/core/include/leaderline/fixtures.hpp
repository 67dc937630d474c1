#pragma once

#include <cstdint>

#include "leaderline/model.hpp"

namespace leaderline {

struct CitiesLikeOptions {
  int sites = 25;
  int groups = 13;       // upper bound; bands need at least two sites each
  int order_pairs = 0;   // arcs between y-adjacent sites, upper site first
  std::uint64_t seed = 1;
  ObjectiveKind objective = ObjectiveKind::Length;
};

// One-sided fixed instance in the style of grouped city maps: integer
// coordinates, label height 2, m = 2n right-side candidates at least one
// label height apart, and groups that are overlapping bands of sites
// consecutive in y. Deterministic for a given seed.
Instance gen_cities_like(const CitiesLikeOptions& options);

}  // namespace leaderline
