#include "leaderline/reductions.hpp"

#include <numeric>
#include <string>

#include "leaderline/errors.hpp"

namespace leaderline {
namespace {

void add_site(Instance& inst, const Rational& x, const Rational& y, const Rational& h) {
  inst.sites.push_back(Site{inst.site_count(), x, y, h});
}

void add_candidate(Instance& inst, Side side, const Rational& y) {
  inst.candidates.push_back(Candidate{inst.candidate_count(), side, y});
}

}  // namespace

PartitionInstance gen_partition_instance(const std::vector<int>& weights, bool use_ordering, bool scale_to_integers) {
  const int n = static_cast<int>(weights.size());
  if (n < 2) throw MalformedInput("partition needs at least two elements");
  long long sum = 0;
  for (int w : weights) {
    if (w <= 0) throw MalformedInput("partition weights must be positive");
    sum += w;
  }
  if (sum % 2 != 0) throw MalformedInput("partition weights must have an even sum");
  const long long a = sum / 2;
  if (a < 6) throw MalformedInput("partition needs A >= 6");

  PartitionInstance out;
  out.n_elements = n;
  out.half_sum = Rational(static_cast<long>(a));
  out.epsilon = Rational(1, 2 * n);
  const Rational A = out.half_sum;
  const Rational eps = out.epsilon;
  Instance& inst = out.instance;
  inst.mode = CandidateMode::Sliding;
  inst.objective = ObjectiveKind::Bends;
  inst.boundary = Boundary{0, n + 14, 0, A * 5};

  const int half = n / 2;
  for (int i = 1; i <= n; ++i) {
    Rational y = i <= half ? Rational(A * 5 / 2 - eps * (half - i + 2)) : Rational(A * 5 / 2 + eps * (i - half + 1));
    add_site(inst, 8 + i, y, weights[i - 1]);
  }

  const Rational h1 = 1;
  const Rational h2 = floor((A - 4) / 2);
  const Rational h3 = a % 2 == 0 ? 2 : 3;
  auto block = [&](const Rational& xb, const Rational& yb) {
    const int first = inst.site_count();
    add_site(inst, xb + 2 - eps, yb + h3 / 2 + h2 / 2 + eps, h1);
    add_site(inst, xb, yb - eps, h2);
    add_site(inst, xb + 3, yb, h3);
    add_site(inst, xb + 1, yb + eps, h2);
    add_site(inst, xb + 2 + eps, yb - h3 / 2 - h2 / 2 - eps, h1);
    if (use_ordering) {
      for (int k = 0; k < 4; ++k) inst.constraints.order.emplace_back(first + k, first + k + 1);
    } else {
      for (int k = 0; k < 3; ++k) inst.constraints.groups.push_back({first + k, first + k + 1, first + k + 2});
    }
  };
  block(9 + n, A * 5 / 2);
  block(1, A * 5 - A / 2);
  block(5, A / 2);
  out.grouping_constraints_emitted = static_cast<int>(inst.constraints.groups.size());

  if (scale_to_integers) {
    const Rational k = 2 * n;
    for (auto& s : inst.sites) {
      s.x *= k;
      s.y *= k;
      s.label_height *= k;
    }
    inst.boundary = Boundary{inst.boundary.x_left * k, inst.boundary.x_right * k, inst.boundary.y_bottom * k,
                             inst.boundary.y_top * k};
  }
  return out;
}

BlockerGadget gen_blocker(const Rational& x_b, const Rational& y_b, int clauses, const Rational& x_r,
                          const Rational& x_shift) {
  BlockerGadget g;
  const int m = clauses;
  auto site = [&](const Rational& x, const Rational& dy) {
    g.sites.push_back(Site{static_cast<int>(g.sites.size()), x, y_b + dy, 1});
  };
  site(x_b + m + 1 + x_shift, 2);
  site(x_b + m + 3 + x_shift, 3);
  site(x_b + m + 2 + x_shift, 4);
  site(x_r - x_b - m - 1 - x_shift, 9);
  site(x_r - x_b - m - 3 - x_shift, 8);
  site(x_r - x_b - m - 2 - x_shift, 7);
  site(x_b, 11);
  site(x_r - x_b, 0);
  for (int dy : {1, 3, 5, 11}) g.candidates.push_back(Candidate{static_cast<int>(g.candidates.size()), Side::Right, y_b + dy});
  for (int dy : {0, 6, 8, 10}) g.candidates.push_back(Candidate{static_cast<int>(g.candidates.size()), Side::Left, y_b + dy});
  g.groups = {{0, 1, 2}, {3, 4, 5}, {6, 0, 1, 2}, {7, 3, 4, 5}};
  g.order = {{0, 1}, {1, 2}, {3, 4}, {4, 5}};
  return g;
}

Instance blocker_instance(const Rational& x_b, const Rational& y_b, int clauses, const Rational& x_r) {
  BlockerGadget g = gen_blocker(x_b, y_b, clauses, x_r);
  Instance inst;
  inst.boundary = Boundary{0, x_r, y_b - 1, y_b + 12};
  inst.mode = CandidateMode::Fixed;
  inst.objective = ObjectiveKind::Bends;
  inst.sites = g.sites;
  inst.candidates = g.candidates;
  inst.constraints.groups = g.groups;
  inst.constraints.order = g.order;
  return inst;
}

SatInstance gen_one_in_three_instance(const OneInThreeFormula& formula) {
  const int n = formula.variables;
  const int m = static_cast<int>(formula.clauses.size());
  if (n < 1) throw MalformedInput("formula needs at least one variable");
  for (const auto& clause : formula.clauses) {
    for (int l = 0; l < 3; ++l) {
      if (clause[l] < 0 || clause[l] >= n) throw MalformedInput("clause refers to unknown variable");
      if (clause[l] == clause[(l + 1) % 3]) throw MalformedInput("clause repeats a variable");
    }
  }
  SatInstance out;
  out.x_r = 8 * m + 2 * n + 8;
  const Rational xr = out.x_r;
  const Rational mid = xr / 2;
  Instance& inst = out.instance;
  inst.mode = CandidateMode::Fixed;
  inst.objective = ObjectiveKind::Bends;
  inst.boundary = Boundary{0, xr, 0, 4 * n + 18 * m + 1};
  auto& order = inst.constraints.order;

  for (int i = 1; i <= n; ++i) {
    out.variable_sites.push_back(inst.site_count());
    add_site(inst, mid - 2 * m - i, 4 * i - 2, 1);
    out.twin_sites.push_back(inst.site_count());
    add_site(inst, mid + 2 * m + i, 4 * i - 1, 1);
    add_candidate(inst, Side::Left, 4 * i - 3);
    add_candidate(inst, Side::Right, 4 * i);
  }
  for (int i = 0; i + 1 < n; ++i) {
    const int s = out.variable_sites[i];
    const int t = out.twin_sites[i];
    const int s_next = out.variable_sites[i + 1];
    const int t_next = out.twin_sites[i + 1];
    order.emplace_back(s_next, s);
    order.emplace_back(t_next, s);
    order.emplace_back(s_next, t);
    order.emplace_back(t_next, t);
  }

  // Each gadget's sites go above the topmost site of the gadget below.
  int below_top = out.twin_sites.back();
  for (int j = 1; j <= m; ++j) {
    const int yb = 4 * n + 18 * (j - 1) + 1;
    BlockerGadget g = gen_blocker(j, yb, m, xr, fraction(j - 1, 2 * m));
    const int first = inst.site_count();
    for (const auto& s : g.sites) add_site(inst, s.x, s.y, s.label_height);
    for (const auto& c : g.candidates) add_candidate(inst, c.side, c.y);
    for (const auto& group : g.groups) {
      std::vector<int> ids;
      for (int k : group) ids.push_back(first + k);
      inst.constraints.groups.push_back(ids);
    }
    for (auto [u, w] : g.order) order.emplace_back(first + u, first + w);
    for (int k = 0; k < 8; ++k) order.emplace_back(first + k, below_top);
    below_top = first + 6;

    const int yj = 4 * n + 18 * (j - 1) + 13;
    std::array<int, 3> d{};
    for (int l = 0; l < 3; ++l) {
      d[l] = inst.site_count();
      add_site(inst, mid + m * (l - 1) + (j - 1), yj + l + 1, 1);
    }
    add_candidate(inst, Side::Left, yj);
    add_candidate(inst, Side::Right, yj + 4);
    add_candidate(inst, Side::Right, yj + 5);
    const auto& clause = formula.clauses[j - 1];
    for (int l = 0; l < 3; ++l) order.emplace_back(out.variable_sites[clause[l]], d[l]);
    for (int l = 0; l < 3; ++l) order.emplace_back(d[l], below_top);
    below_top = d[2];
    out.clause_sites.push_back(d);
  }
  return out;
}

bool one_in_three_satisfiable(const OneInThreeFormula& formula) {
  for (long mask = 0; mask < (1L << formula.variables); ++mask) {
    bool ok = true;
    for (const auto& clause : formula.clauses) {
      int trues = 0;
      for (int v : clause) trues += (mask >> v) & 1;
      ok = ok && trues == 1;
    }
    if (ok) return true;
  }
  return false;
}

bool partition_exists(const std::vector<int>& weights) {
  const long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
  if (total % 2 != 0) return false;
  for (long mask = 0; mask < (1L << weights.size()); ++mask) {
    long long part = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      if ((mask >> i) & 1) part += weights[i];
    }
    if (2 * part == total) return true;
  }
  return false;
}

}  // namespace leaderline
