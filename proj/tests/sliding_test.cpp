#include <gtest/gtest.h>

#include "generators.hpp"
#include "leaderline/errors.hpp"
#include "leaderline/sliding.hpp"
#include "leaderline/verify.hpp"
#include "order_oracles.hpp"

namespace leaderline {
namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<Site> sites_at(std::vector<Rational> ys, Rational h = 1) {
  std::vector<Site> out;
  for (size_t i = 0; i < ys.size(); ++i) out.push_back(Site{static_cast<int>(i), static_cast<int>(i) + 1, ys[i], h});
  return out;
}

std::vector<Rational> qs(std::initializer_list<const char*> list) {
  std::vector<Rational> out;
  for (const char* s : list) out.push_back(q(s));
  return out;
}

Instance sliding(std::vector<Site> sites, ObjectiveKind kind) {
  Instance inst;
  inst.mode = CandidateMode::Sliding;
  inst.objective = kind;
  inst.sites = std::move(sites);
  Rational top = 1;
  for (const auto& s : inst.sites) top = std::max(top, Rational(s.y + 1));
  inst.boundary = Boundary{0, inst.site_count() + 2, -1, top};
  return inst;
}

TEST(MinGap, Examples) {
  EXPECT_EQ(min_gap_d(sites_at(qs({"0", "1.5"})), 1), q("0.5"));
  EXPECT_EQ(min_gap_d(sites_at(qs({"0", "1.3", "2.9"})), 1), q("0.3"));
  EXPECT_THROW(min_gap_d(sites_at(qs({"0", "2"})), 1), MalformedInput);
  EXPECT_THROW(min_gap_d(sites_at(qs({"0"})), 1), MalformedInput);
}

TEST(Canonical, SingleSiteEpsilon) {
  EXPECT_EQ(canonical_candidates(sites_at(qs({"0"})), 1, q("1/4")),
            qs({"-5/4", "-1", "-3/4", "-1/4", "0", "1/4", "3/4", "1", "5/4"}));
}

TEST(Canonical, SingleSiteVmin) {
  EXPECT_EQ(canonical_candidates_vmin(sites_at(qs({"0"})), 1, q("1/10")),
            qs({"-11/10", "-1", "-9/10", "-1/10", "0", "1/10", "9/10", "1", "11/10"}));
  EXPECT_EQ(canonical_candidates_vmin(sites_at(qs({"0"})), 1, 2), qs({"-3", "-2", "-1", "0", "1", "2", "3"}));
}

TEST(Canonical, DuplicatesCollapseAndSizeBound) {
  auto sites = sites_at(qs({"0", "5/4"}));
  auto c = canonical_candidates(sites, 1, q("1/4"));
  const size_t n = sites.size();
  EXPECT_LT(c.size(), n * (6 * (n + 1) - 3));
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
  EXPECT_EQ(std::adjacent_find(c.begin(), c.end()), c.end());
}

TEST(Discretize, DefaultsAndEpsilonRange) {
  Instance inst = sliding(sites_at(qs({"1", "5/2"})), ObjectiveKind::Bends);
  Discretization d = discretize(inst);
  EXPECT_EQ(d.h, 1);
  EXPECT_EQ(d.d, q("1/2"));
  EXPECT_EQ(d.epsilon, q("1/4"));
  EXPECT_THROW(discretize(inst, Rational(0)), MalformedInput);
  EXPECT_THROW(discretize(inst, q("1/2")), MalformedInput);
  EXPECT_NO_THROW(discretize(inst, q("1/8")));
  Instance fixed = discretized_instance(inst, d);
  EXPECT_EQ(fixed.mode, CandidateMode::Fixed);
  EXPECT_EQ(fixed.candidate_count(), static_cast<int>(d.candidates.size()));
  EXPECT_LE(fixed.boundary.y_bottom, d.candidates.front());
  EXPECT_GE(fixed.boundary.y_top, d.candidates.back());
}

TEST(SolveSliding, SingleSiteIsAligned) {
  Instance inst = sliding(sites_at(qs({"3"})), ObjectiveKind::Bends);
  auto sol = solve_sliding(inst);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->value, 0);
  EXPECT_EQ(sol->labeling.placements[0].y, 3);
}

TEST(SolveSliding, Rejections) {
  Instance inst = sliding(sites_at(qs({"1", "5/2"})), ObjectiveKind::Length);
  EXPECT_THROW(solve_sliding(inst), MalformedInput);
  inst.v_min = q("1/4");
  EXPECT_NO_THROW(solve_sliding(inst));
  inst.sites[1].label_height = 2;
  EXPECT_THROW(solve_sliding(inst), MalformedInput);
  Instance zero = sliding(sites_at(qs({"1", "3"})), ObjectiveKind::Bends);
  EXPECT_THROW(solve_sliding(zero), MalformedInput);
}

TEST(SolveSliding, LengthRespectsVmin) {
  test::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = test::random_sliding_instance(rng, {4, 1, 2});
    inst.objective = ObjectiveKind::Length;
    inst.v_min = q("1/4");
    auto sol = solve_sliding(inst);
    if (!sol) continue;
    auto report = verify(inst, sol->labeling);
    EXPECT_TRUE(report.admissible()) << report.to_text();
    EXPECT_EQ(report.objective_value, sol->value);
  }
}

TEST(SolveSliding, EpsilonChoiceDoesNotMatter) {
  test::Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = test::random_sliding_instance(rng, {4, 2, 2});
    inst.objective = ObjectiveKind::Bends;
    Discretization d = discretize(inst);
    auto half = solve_sliding(inst, {}, nullptr, d.d / 2);
    auto quarter = solve_sliding(inst, {}, nullptr, d.d / 4);
    ASSERT_EQ(half.has_value(), quarter.has_value()) << "trial " << trial;
    if (half) {
      EXPECT_EQ(half->value, quarter->value);
    }
  }
}

TEST(SolveSliding, SmallInstancesMatchGridOracle) {
  test::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = test::random_sliding_instance(rng, {4, 2, 2});
    inst.objective = ObjectiveKind::Bends;
    Discretization d = discretize(inst);
    auto sol = solve_sliding(inst);
    auto grid = test::grid_order_oracle(inst, d.d / 8);
    ASSERT_EQ(sol.has_value(), grid.has_value()) << "trial " << trial;
    if (!sol) continue;
    EXPECT_EQ(sol->value, grid->value);
    EXPECT_TRUE(verify(inst, grid->labeling).admissible());
  }
}

}  // namespace
}  // namespace leaderline
