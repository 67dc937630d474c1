#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "leaderline/model.hpp"

namespace leaderline {

// Sentinel ids for the bounding sites and candidates of a sub-instance.
inline constexpr int kTopSentinel = -1;
inline constexpr int kBottomSentinel = -2;

// Sub-instance bounded above by the leader (s1, c1) and below by (s2, c2).
// Ids are site and candidate ids or one of the sentinels.
struct SubInstance {
  int s1 = kTopSentinel;
  int c1 = kTopSentinel;
  int s2 = kBottomSentinel;
  int c2 = kBottomSentinel;
};

struct Solution {
  Labeling labeling;
  Rational value;
};

struct SolveOptions {
  bool memoize_constraint_checks = true;
};

struct SolveStats {
  std::size_t states = 0;
  std::size_t admissibility_checks = 0;
  std::size_t constraint_checks = 0;
  std::size_t constraint_cache_hits = 0;
};

// Exact dynamic program for one-sided instances with fixed candidates.
// The instance's v_min, when present, additionally keeps every horizontal
// leader segment at least v_min away from the sites it passes.
class FixedSolver {
 public:
  // Throws MalformedInput for invalid, two-sided or sliding instances and
  // when there are fewer candidates than sites.
  explicit FixedSolver(const Instance& instance, SolveOptions options = {});
  ~FixedSolver();
  FixedSolver(const FixedSolver&) = delete;
  FixedSolver& operator=(const FixedSolver&) = delete;

  // False when the groups admit no common consecutive order, the order
  // relation is cyclic, or no PQ-tree frontier extends it.
  bool constraints_consistent() const;

  // Sites of the sub-instance, top to bottom.
  std::vector<int> sites_of(const SubInstance& sub) const;
  // Candidates of the sub-instance, bottom to top.
  std::vector<int> candidates_of(const SubInstance& sub) const;

  // Whether labeling the leftmost site of `sub` at height `label_y` keeps
  // every group and order pair satisfiable inside `sub`. Requires
  // consistent constraints and a non-empty sub-instance.
  bool respects_constraints(const SubInstance& sub, const Rational& label_y);

  // The four admissibility criteria for giving the leftmost site of `sub`
  // the candidate `candidate`.
  bool admissible(const SubInstance& sub, int candidate);

  std::optional<Solution> solve();

  const SolveStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::optional<Solution> solve_fixed(const Instance& instance, const SolveOptions& options = {},
                                    SolveStats* stats = nullptr);

}  // namespace leaderline
