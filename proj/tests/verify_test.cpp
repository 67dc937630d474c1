#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "leaderline/errors.hpp"
#include "leaderline/oracle.hpp"
#include "leaderline/solver.hpp"
#include "leaderline/verify.hpp"

namespace leaderline {
namespace {

Instance diagonal() {
  Instance inst;
  inst.boundary = Boundary{0, 5, 0, 4};
  inst.sites = {Site{0, 1, 3, 1}, Site{1, 2, 2, 1}, Site{2, 3, 1, 1}};
  for (int y : {1, 2, 3}) inst.candidates.push_back(Candidate{inst.candidate_count(), Side::Right, y});
  return inst;
}

TEST(Verify, MinimalUnconstrainedLabelingSplitsGroup) {
  Instance inst = diagonal();
  auto best = oracle_solve(inst);
  ASSERT_TRUE(best);
  EXPECT_TRUE(verify(inst, best->labeling).admissible());
  inst.constraints.groups = {{0, 2}};
  auto report = verify(inst, best->labeling);
  EXPECT_TRUE(report.planar());
  EXPECT_FALSE(report.admissible());
  ASSERT_EQ(report.group_violations.size(), 1u);
  EXPECT_EQ(report.group_violations[0].reason, "interleaved by site 1");
  EXPECT_EQ(report.to_text(), "admissible: no\nobjective: 9\ngroup 0: interleaved by site 1\n");
}

TEST(Verify, OrderAcrossSidesIsVacuous) {
  Instance inst;
  inst.boundary = Boundary{0, 6, 0, 6};
  inst.sites = {Site{0, 1, 1, 1}, Site{1, 5, 4, 1}};
  inst.candidates = {Candidate{0, Side::Left, 1}, Candidate{1, Side::Right, 4}};
  inst.constraints.order = {{0, 1}};
  auto report = verify(inst, labeling_from_assignment(inst, {0, 1}));
  EXPECT_TRUE(report.order_violations.empty());
  EXPECT_TRUE(report.admissible());
}

TEST(Verify, GroupAcrossSides) {
  Instance inst;
  inst.boundary = Boundary{0, 6, 0, 6};
  inst.sites = {Site{0, 1, 1, 1}, Site{1, 5, 4, 1}};
  inst.candidates = {Candidate{0, Side::Left, 1}, Candidate{1, Side::Right, 4}};
  inst.constraints.groups = {{0, 1}};
  auto report = verify(inst, labeling_from_assignment(inst, {0, 1}));
  ASSERT_EQ(report.group_violations.size(), 1u);
  EXPECT_EQ(report.group_violations[0].reason, "members on both sides");
}

TEST(Verify, RejectsPartialAndNonInjective) {
  Instance inst = diagonal();
  Labeling partial = labeling_from_assignment(inst, {0, 1});
  EXPECT_THROW(verify(inst, partial), MalformedInput);
  EXPECT_THROW(verify(inst, labeling_from_assignment(inst, {0, 0, 1})), MalformedInput);
  Labeling wrong = labeling_from_assignment(inst, {0, 1, 2});
  wrong.placements[0].y = 7;
  EXPECT_THROW(verify(inst, wrong), MalformedInput);
  EXPECT_THROW(labeling_from_assignment(inst, {0, 1, 5}), MalformedInput);
}

TEST(Evaluate, Examples) {
  Instance empty;
  empty.boundary = Boundary{0, 1, 0, 1};
  EXPECT_EQ(evaluate(empty, Labeling{}), 0);
  Instance inst = diagonal();
  inst.objective = ObjectiveKind::Bends;
  EXPECT_EQ(evaluate(inst, labeling_from_assignment(inst, {2, 1, 0})), 0);
  EXPECT_EQ(evaluate(inst, labeling_from_assignment(inst, {1, 2, 0})), 2);
  auto best = oracle_solve(inst);
  ASSERT_TRUE(best);
  EXPECT_EQ(evaluate(inst, best->labeling), best->value);
}

Instance mirrored(const Instance& inst) {
  Instance m = inst;
  const Rational span = inst.boundary.x_left + inst.boundary.x_right;
  for (auto& s : m.sites) s.x = span - s.x;
  for (auto& c : m.candidates) c.side = c.side == Side::Left ? Side::Right : Side::Left;
  return m;
}

Labeling mirrored(const Labeling& lab) {
  Labeling m = lab;
  for (auto& p : m.placements) p.side = p.side == Side::Left ? Side::Right : Side::Left;
  return m;
}

TEST(Verify, MirrorSymmetry) {
  test::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = test::random_two_sided_instance(rng);
    Labeling lab = test::random_labeling(rng, inst);
    auto a = verify(inst, lab);
    auto b = verify(mirrored(inst), mirrored(lab));
    EXPECT_EQ(a.label_overlaps, b.label_overlaps);
    EXPECT_EQ(a.leader_leader, b.leader_leader);
    EXPECT_EQ(a.leader_site, b.leader_site);
    EXPECT_EQ(a.separation, b.separation);
    EXPECT_EQ(a.group_violations.size(), b.group_violations.size());
    EXPECT_EQ(a.order_violations, b.order_violations);
    EXPECT_EQ(a.objective_value, b.objective_value);
  }
}

TEST(Verify, DroppingConstraintsKeepsPlanarity) {
  test::Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = test::random_two_sided_instance(rng);
    Labeling lab = test::random_labeling(rng, inst);
    auto a = verify(inst, lab);
    Instance bare = inst;
    bare.constraints = {};
    auto b = verify(bare, lab);
    EXPECT_TRUE(b.group_violations.empty());
    EXPECT_TRUE(b.order_violations.empty());
    EXPECT_EQ(a.planar(), b.planar());
  }
}

// Consecutiveness read off the sorted label sequence of one side.
bool group_ok_by_sorting(const Instance& inst, const Labeling& lab, const std::vector<int>& group) {
  const Side side = lab.placements[group[0]].side;
  for (int s : group) {
    if (lab.placements[s].side != side) return false;
  }
  std::map<Rational, int> column;
  for (int i = 0; i < inst.site_count(); ++i) {
    if (lab.placements[i].side == side) column[lab.placements[i].y] = i;
  }
  std::vector<int> seq;
  for (auto& [y, s] : column) seq.push_back(std::find(group.begin(), group.end(), s) != group.end());
  auto first = std::find(seq.begin(), seq.end(), 1);
  auto last = std::find(seq.rbegin(), seq.rend(), 1).base();
  return std::all_of(first, last, [](int v) { return v == 1; });
}

TEST(Verify, GroupCheckMatchesSortedSequence) {
  test::Rng rng(57);
  for (int trial = 0; trial < 500; ++trial) {
    Instance inst = test::random_two_sided_instance(rng);
    Labeling lab = test::random_labeling(rng, inst);
    auto report = verify(inst, lab);
    std::vector<char> flagged(inst.constraints.groups.size(), 0);
    for (const auto& v : report.group_violations) flagged[v.group] = 1;
    for (size_t g = 0; g < inst.constraints.groups.size(); ++g) {
      EXPECT_EQ(!flagged[g], group_ok_by_sorting(inst, lab, inst.constraints.groups[g]));
    }
  }
}

TEST(Verify, SolverOutputsAreAdmissible) {
  test::Rng rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = test::random_fixed_instance(rng);
    auto sol = solve_fixed(inst);
    if (!sol) continue;
    auto report = verify(inst, sol->labeling);
    EXPECT_TRUE(report.admissible()) << report.to_text();
    EXPECT_EQ(report.objective_value, sol->value);
  }
}

}  // namespace
}  // namespace leaderline
