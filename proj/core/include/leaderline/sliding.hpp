#pragma once

#include <optional>
#include <vector>

#include "leaderline/model.hpp"
#include "leaderline/solver.hpp"

namespace leaderline {

// Smallest amount by which some vertical site distance exceeds a multiple
// of h. Throws MalformedInput for fewer than two sites or when the minimum
// is zero.
Rational min_gap_d(const std::vector<Site>& sites, const Rational& h);

// y(s) + i h and y(s) + i h +- offset for |i| <= n, over all sites, sorted
// and deduplicated.
std::vector<Rational> canonical_candidates(const std::vector<Site>& sites, const Rational& h, const Rational& epsilon);
std::vector<Rational> canonical_candidates_vmin(const std::vector<Site>& sites, const Rational& h,
                                                const Rational& v_min);

struct Discretization {
  Rational h;
  Rational d;
  Rational epsilon;
  std::optional<Rational> v_min;
  std::vector<Rational> candidates;
};

// Candidate set for a sliding instance with uniform label heights. Uses the
// v_min offsets when the instance carries v_min, the epsilon offsets
// otherwise; `epsilon` defaults to d/2 and must lie strictly inside (0, d).
Discretization discretize(const Instance& instance, std::optional<Rational> epsilon = std::nullopt);

// The fixed one-sided instance over the discretized candidates. The vertical
// extent of the boundary grows to hold every candidate.
Instance discretized_instance(const Instance& instance, const Discretization& discretization);

// Throws MalformedInput for non-sliding instances, non-uniform heights, a
// zero gap d, or the length objective without v_min.
std::optional<Solution> solve_sliding(const Instance& instance, const SolveOptions& options = {},
                                      SolveStats* stats = nullptr,
                                      std::optional<Rational> epsilon = std::nullopt);

}  // namespace leaderline
