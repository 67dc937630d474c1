#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leaderline/model.hpp"

namespace leaderline {

struct GroupViolation {
  int group = 0;
  std::string reason;
};

struct VerifyReport {
  std::vector<std::pair<int, int>> label_overlaps;
  std::vector<std::pair<int, int>> leader_leader;
  std::vector<std::pair<int, int>> leader_site;  // (leader's site, crossed site)
  std::vector<std::pair<int, int>> separation;   // (leader's site, site closer than v_min)
  std::vector<GroupViolation> group_violations;
  std::vector<std::pair<int, int>> order_violations;
  Rational objective_value;

  bool planar() const;
  bool admissible() const;
  // Line-oriented: a status line, the objective, then one line per violation.
  std::string to_text() const;
};

// Throws MalformedInput when the labeling is partial, not injective, or
// names candidates inconsistently with the instance.
VerifyReport verify(const Instance& instance, const Labeling& labeling);

Rational evaluate(const Instance& instance, const Labeling& labeling);

// Labeling that gives site i the candidate assignment[i].
Labeling labeling_from_assignment(const Instance& instance, const std::vector<int>& assignment);

}  // namespace leaderline
