#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "leaderline/fixtures.hpp"
#include "leaderline/oracle.hpp"
#include "leaderline/sliding.hpp"
#include "leaderline/solver.hpp"
#include "leaderline/verify.hpp"

namespace leaderline {
namespace {

TEST(Property, SolverMatchesOracleOnSmallInstances) {
  test::Rng rng(101);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = test::random_fixed_instance(rng);
    auto sol = solve_fixed(inst);
    auto ref = oracle_solve(inst);
    ASSERT_EQ(sol.has_value(), ref.has_value()) << "trial " << trial;
    if (!sol) continue;
    ++feasible;
    EXPECT_EQ(sol->value, ref->value) << "trial " << trial;
    EXPECT_TRUE(verify(inst, sol->labeling).admissible());
  }
  EXPECT_GT(feasible, 40);
}

TEST(Property, ExtraCandidatesNeverHurt) {
  test::Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = test::random_fixed_instance(rng, {5, 7, 2, 2, 16});
    auto before = solve_fixed(inst);
    Instance more = inst;
    Rational y = test::uniform(rng, 1, 15) + Rational(1, 2);
    more.candidates.push_back(Candidate{more.candidate_count(), Side::Right, y});
    auto after = solve_fixed(more);
    if (before) {
      ASSERT_TRUE(after);
      EXPECT_LE(after->value, before->value);
    }
  }
}

TEST(Property, GroupsAndOrderHoldOnSolverOutputs) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CitiesLikeOptions opt;
    opt.sites = 14;
    opt.groups = 5;
    opt.order_pairs = 3;
    opt.seed = seed;
    opt.objective = seed % 2 ? ObjectiveKind::Length : ObjectiveKind::Bends;
    Instance inst = gen_cities_like(opt);
    auto sol = solve_fixed(inst);
    if (!sol) continue;
    auto report = verify(inst, sol->labeling);
    EXPECT_TRUE(report.admissible()) << report.to_text();
    EXPECT_EQ(report.objective_value, sol->value);
  }
}

TEST(Property, CitiesLikeFullSize) {
  CitiesLikeOptions opt;
  opt.seed = 3;
  Instance inst = gen_cities_like(opt);
  EXPECT_EQ(inst.site_count(), 25);
  EXPECT_EQ(inst.candidate_count(), 50);
  EXPECT_LE(inst.constraints.groups.size(), 13u);
  auto sol = solve_fixed(inst);
  ASSERT_TRUE(sol);
  EXPECT_TRUE(verify(inst, sol->labeling).admissible());
}

// Both verdicts agree with an exhaustive SAT encoding of the same instances.
TEST(Property, CitiesLikeVerdicts) {
  for (std::uint64_t seed : {1, 2, 4}) {
    CitiesLikeOptions opt;
    opt.seed = seed;
    opt.order_pairs = 2;
    EXPECT_FALSE(solve_fixed(gen_cities_like(opt))) << "seed " << seed;
  }
  for (std::uint64_t seed : {3, 5, 6}) {
    CitiesLikeOptions opt;
    opt.seed = seed;
    opt.order_pairs = 2;
    Instance inst = gen_cities_like(opt);
    auto sol = solve_fixed(inst);
    ASSERT_TRUE(sol) << "seed " << seed;
    EXPECT_TRUE(verify(inst, sol->labeling).admissible());
  }
}

TEST(Property, SlidingOutputsAreAdmissible) {
  test::Rng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = test::random_sliding_instance(rng);
    if (inst.objective == ObjectiveKind::Length) inst.v_min = Rational(1, 8);
    auto sol = solve_sliding(inst);
    if (!sol) continue;
    auto report = verify(inst, sol->labeling);
    EXPECT_TRUE(report.admissible()) << "trial " << trial << "\n" << report.to_text();
    EXPECT_EQ(report.objective_value, sol->value);
  }
}

TEST(Property, OracleCountIsZeroExactlyWhenInfeasible) {
  test::Rng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = test::random_two_sided_instance(rng, {5, 7, 3, 3, 12});
    EXPECT_EQ(oracle_solve(inst).has_value(), count_admissible(inst) > 0);
  }
}

}  // namespace
}  // namespace leaderline
