#include "leaderline/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "leaderline/errors.hpp"

namespace leaderline {

bool VerifyReport::planar() const {
  return label_overlaps.empty() && leader_leader.empty() && leader_site.empty() && separation.empty();
}

bool VerifyReport::admissible() const {
  return planar() && group_violations.empty() && order_violations.empty();
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "admissible: " << (admissible() ? "yes" : "no") << '\n';
  os << "objective: " << format_rational(objective_value) << '\n';
  for (auto [a, b] : label_overlaps) os << "label_overlap " << a << ' ' << b << '\n';
  for (auto [a, b] : leader_leader) os << "leader_conflict " << a << ' ' << b << '\n';
  for (auto [a, b] : leader_site) os << "leader_crosses_site " << a << ' ' << b << '\n';
  for (auto [a, b] : separation) os << "separation " << a << ' ' << b << '\n';
  for (const auto& g : group_violations) os << "group " << g.group << ": " << g.reason << '\n';
  for (auto [a, b] : order_violations) os << "order " << a << ' ' << b << '\n';
  return os.str();
}

namespace {

void check_shape(const Instance& inst, const Labeling& labeling) {
  if (static_cast<int>(labeling.placements.size()) != inst.site_count()) {
    throw MalformedInput("labeling covers " + std::to_string(labeling.placements.size()) + " of " +
                         std::to_string(inst.site_count()) + " sites");
  }
  std::set<std::pair<Side, Rational>> used;
  for (size_t i = 0; i < labeling.placements.size(); ++i) {
    const Placement& p = labeling.placements[i];
    if (inst.mode == CandidateMode::Fixed) {
      if (p.candidate < 0 || p.candidate >= inst.candidate_count()) {
        throw MalformedInput("site " + std::to_string(i) + " is not assigned a candidate");
      }
      const Candidate& c = inst.candidates[p.candidate];
      if (c.side != p.side || c.y != p.y) {
        throw MalformedInput("site " + std::to_string(i) + " disagrees with candidate " + std::to_string(p.candidate));
      }
    }
    if (!used.emplace(p.side, p.y).second) {
      throw MalformedInput("labeling is not injective at site " + std::to_string(i));
    }
  }
}

}  // namespace

VerifyReport verify(const Instance& inst, const Labeling& labeling) {
  check_shape(inst, labeling);
  VerifyReport report;
  const int n = inst.site_count();
  const auto& sites = inst.sites;
  const auto& pl = labeling.placements;
  std::vector<PoLeader> leaders;
  for (int i = 0; i < n; ++i) leaders.push_back(make_leader(sites[i], pl[i].side, pl[i].y));

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pl[i].side == pl[j].side && labels_overlap(pl[i].y, sites[i].label_height, pl[j].y, sites[j].label_height)) {
        report.label_overlaps.emplace_back(i, j);
      }
      if (leaders_conflict(leaders[i], leaders[j], inst.boundary)) report.leader_leader.emplace_back(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    const Rational& bx = inst.boundary.side_x(pl[i].side);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (leader_crosses_site(leaders[i], sites[j], inst.boundary)) report.leader_site.emplace_back(i, j);
      if (inst.v_min) {
        bool spanned = (sites[i].x < sites[j].x && sites[j].x < bx) || (bx < sites[j].x && sites[j].x < sites[i].x);
        if (spanned && abs(sites[j].y - pl[i].y) < *inst.v_min) report.separation.emplace_back(i, j);
      }
    }
  }

  for (size_t g = 0; g < inst.constraints.groups.size(); ++g) {
    const auto& group = inst.constraints.groups[g];
    const Side side = pl[group.front()].side;
    bool split_sides = false;
    for (int s : group) split_sides = split_sides || pl[s].side != side;
    if (split_sides) {
      report.group_violations.push_back({static_cast<int>(g), "members on both sides"});
      continue;
    }
    Rational lo = pl[group.front()].y;
    Rational hi = lo;
    std::vector<char> member(n, 0);
    for (int s : group) {
      member[s] = 1;
      lo = std::min(lo, pl[s].y);
      hi = std::max(hi, pl[s].y);
    }
    std::vector<int> intruders;
    for (int s = 0; s < n; ++s) {
      if (!member[s] && pl[s].side == side && lo < pl[s].y && pl[s].y < hi) intruders.push_back(s);
    }
    if (!intruders.empty()) {
      std::string reason = "interleaved by site";
      for (int s : intruders) reason += " " + std::to_string(s);
      report.group_violations.push_back({static_cast<int>(g), reason});
    }
  }
  for (auto [a, b] : inst.constraints.order) {
    if (a == b) continue;
    if (pl[a].side == pl[b].side && pl[a].y < pl[b].y) report.order_violations.emplace_back(a, b);
  }
  report.objective_value = labeling_objective(inst, labeling);
  return report;
}

Rational evaluate(const Instance& instance, const Labeling& labeling) {
  check_shape(instance, labeling);
  return labeling_objective(instance, labeling);
}

Labeling labeling_from_assignment(const Instance& instance, const std::vector<int>& assignment) {
  Labeling out;
  for (int c : assignment) {
    if (c < 0 || c >= instance.candidate_count()) throw MalformedInput("unknown candidate " + std::to_string(c));
    const Candidate& cand = instance.candidates[c];
    out.placements.push_back(Placement{cand.side, cand.y, c});
  }
  return out;
}

}  // namespace leaderline
