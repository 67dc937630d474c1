#pragma once

#include <array>
#include <vector>

#include "leaderline/model.hpp"

namespace leaderline {

struct PartitionInstance {
  Instance instance;
  int n_elements = 0;
  Rational half_sum;  // A
  Rational epsilon;
  // Grouping constraints emitted (three per block) and the count stated for
  // the construction elsewhere.
  int grouping_constraints_emitted = 0;
  int grouping_constraints_stated = 18;
};

// One-sided sliding instance with element sites 0..N-1 followed by the three
// blocks. Requires N >= 2, positive weights, an even sum and A >= 6.
// `scale_to_integers` multiplies everything by 2N so epsilon becomes 1.
PartitionInstance gen_partition_instance(const std::vector<int>& weights, bool use_ordering,
                                         bool scale_to_integers = false);

struct BlockerGadget {
  std::vector<Site> sites;  // s1..s6, sa, sb
  std::vector<Candidate> candidates;  // right side first, then left
  std::vector<std::vector<int>> groups;  // indices into `sites`
  std::vector<std::pair<int, int>> order;
};

// `x_shift` moves the two site triples towards the centre, keeping them
// clear of other blockers' triples.
BlockerGadget gen_blocker(const Rational& x_b, const Rational& y_b, int clauses, const Rational& x_r,
                          const Rational& x_shift = 0);

// The gadget alone, in a box just large enough to hold it.
Instance blocker_instance(const Rational& x_b, const Rational& y_b, int clauses, const Rational& x_r);

struct OneInThreeFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;  // 0-based variable indices
};

struct SatInstance {
  Instance instance;
  int x_r = 0;
  std::vector<int> variable_sites;  // s_i per variable
  std::vector<int> twin_sites;
  std::vector<std::array<int, 3>> clause_sites;
};

// Two-sided fixed instance with uniform height 1.
SatInstance gen_one_in_three_instance(const OneInThreeFormula& formula);

// Brute force over all 2^N assignments.
bool one_in_three_satisfiable(const OneInThreeFormula& formula);
bool partition_exists(const std::vector<int>& weights);

}  // namespace leaderline
