#pragma once

#include <random>
#include <vector>

#include "leaderline/model.hpp"

namespace leaderline::test {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

// Groups that are intervals of one hidden permutation, so some order keeps
// them all consecutive. With `wild`, occasionally mixes in arbitrary subsets.
std::vector<std::vector<int>> random_groups(Rng& rng, int n, int max_groups, bool wild);

// Random pairs of distinct sites; cycles are possible.
std::vector<std::pair<int, int>> random_arcs(Rng& rng, int n, int max_arcs);

struct FixedParams {
  int max_sites = 6;
  int max_candidates = 9;
  int max_groups = 3;
  int max_arcs = 4;
  int grid = 16;  // coordinates are integers in (0, grid)
};

// One-sided fixed instance with m >= n, integer coordinates, heights 1 or 2,
// either objective, and now and then a v_min.
Instance random_fixed_instance(Rng& rng, const FixedParams& params = {});

// Two-sided variant for oracle-only checks.
Instance random_two_sided_instance(Rng& rng, const FixedParams& params = {});

struct SlidingParams {
  int max_sites = 5;
  int max_groups = 2;
  int max_arcs = 3;
};

// Sliding instance with a uniform height in {1, 2}, site heights on a 1/8
// (h = 1) or 1/4 (h = 2) lattice with no vertical distance a multiple of h.
Instance random_sliding_instance(Rng& rng, const SlidingParams& params = {});

// Arbitrary labeling of a fixed instance: every site gets a random candidate,
// distinct when possible.
Labeling random_labeling(Rng& rng, const Instance& instance);

}  // namespace leaderline::test
