#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace leaderline::test {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

std::vector<int> distinct_values(Rng& rng, int count, int lo, int hi) {
  std::vector<int> pool(hi - lo + 1);
  std::iota(pool.begin(), pool.end(), lo);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

void add_constraints(Rng& rng, Instance& inst, int max_groups, int max_arcs) {
  const int n = inst.site_count();
  if (n >= 2) {
    inst.constraints.groups = random_groups(rng, n, max_groups, true);
    inst.constraints.order = random_arcs(rng, n, max_arcs);
  }
}

}  // namespace

std::vector<std::vector<int>> random_groups(Rng& rng, int n, int max_groups, bool wild) {
  std::vector<int> hidden(n);
  std::iota(hidden.begin(), hidden.end(), 0);
  std::shuffle(hidden.begin(), hidden.end(), rng);
  std::vector<std::vector<int>> groups;
  if (n < 2) return groups;
  const int k = uniform(rng, 0, max_groups);
  for (int g = 0; g < k; ++g) {
    std::vector<int> members;
    if (wild && coin(rng, 0.15)) {
      for (int s = 0; s < n; ++s) {
        if (coin(rng)) members.push_back(s);
      }
      if (members.size() < 2) members = {0, n - 1};
    } else {
      const int len = uniform(rng, 2, n);
      const int start = uniform(rng, 0, n - len);
      members.assign(hidden.begin() + start, hidden.begin() + start + len);
    }
    std::sort(members.begin(), members.end());
    groups.push_back(members);
  }
  return groups;
}

std::vector<std::pair<int, int>> random_arcs(Rng& rng, int n, int max_arcs) {
  std::vector<std::pair<int, int>> arcs;
  if (n < 2) return arcs;
  const int r = uniform(rng, 0, max_arcs);
  for (int i = 0; i < r; ++i) {
    int a = uniform(rng, 0, n - 1);
    int b = uniform(rng, 0, n - 2);
    if (b >= a) ++b;
    arcs.emplace_back(a, b);
  }
  return arcs;
}

namespace {

Instance random_fixed_like(Rng& rng, const FixedParams& p, bool two_sided) {
  Instance inst;
  const int n = uniform(rng, 1, p.max_sites);
  const int m = uniform(rng, n, p.max_candidates);
  inst.boundary = Boundary{0, p.grid, 0, p.grid};
  auto xs = distinct_values(rng, n, 1, p.grid - 1);
  auto ys = distinct_values(rng, n, 1, p.grid - 1);
  const bool uniform_h = coin(rng);
  for (int i = 0; i < n; ++i) {
    int h = uniform_h ? 1 : uniform(rng, 1, 2);
    inst.sites.push_back(Site{i, xs[i], ys[i], h});
  }
  std::set<std::pair<Side, int>> used;
  while (inst.candidate_count() < m) {
    Side side = two_sided && coin(rng) ? Side::Left : Side::Right;
    int y = uniform(rng, 0, p.grid);
    if (used.emplace(side, y).second) inst.candidates.push_back(Candidate{inst.candidate_count(), side, y});
  }
  inst.objective = coin(rng) ? ObjectiveKind::Length : ObjectiveKind::Bends;
  if (coin(rng, 0.25)) inst.v_min = fraction(uniform(rng, 1, 4), 2);
  add_constraints(rng, inst, p.max_groups, p.max_arcs);
  return inst;
}

}  // namespace

Instance random_fixed_instance(Rng& rng, const FixedParams& params) { return random_fixed_like(rng, params, false); }

Instance random_two_sided_instance(Rng& rng, const FixedParams& params) {
  return random_fixed_like(rng, params, true);
}

Instance random_sliding_instance(Rng& rng, const SlidingParams& p) {
  Instance inst;
  inst.mode = CandidateMode::Sliding;
  const int n = uniform(rng, 1, p.max_sites);
  const int h = uniform(rng, 1, 2);
  auto xs = distinct_values(rng, n, 1, 3 * n + 2);
  // Eight residues mod h either way, enough for five sites.
  const int lattice = h == 1 ? 8 : 4;
  std::vector<Rational> ys;
  while (static_cast<int>(ys.size()) < n) {
    Rational y = fraction(uniform(rng, lattice, lattice * (3 * n + 2)), lattice);
    bool ok = true;
    for (const auto& other : ys) {
      Rational dist = abs(y - other);
      if (dist - floor(dist / h) * h == 0) ok = false;
    }
    if (ok) ys.push_back(y);
  }
  inst.boundary = Boundary{0, 3 * n + 3, 0, 3 * n + 3};
  for (int i = 0; i < n; ++i) inst.sites.push_back(Site{i, xs[i], ys[i], h});
  add_constraints(rng, inst, p.max_groups, p.max_arcs);
  inst.objective = coin(rng) ? ObjectiveKind::Length : ObjectiveKind::Bends;
  return inst;
}

Labeling random_labeling(Rng& rng, const Instance& inst) {
  std::vector<int> ids(inst.candidate_count());
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  Labeling lab;
  for (int i = 0; i < inst.site_count(); ++i) {
    const Candidate& c = inst.candidates[ids[i % ids.size()]];
    lab.placements.push_back(Placement{c.side, c.y, c.id});
  }
  return lab;
}

}  // namespace leaderline::test
