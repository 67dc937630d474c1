#include "leaderline/model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "leaderline/errors.hpp"

namespace leaderline {

std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

std::string to_string(ObjectiveKind kind) { return kind == ObjectiveKind::Length ? "length" : "bends"; }

std::string to_string(CandidateMode mode) { return mode == CandidateMode::Fixed ? "fixed" : "sliding"; }

Constraints normalize_constraints(Constraints constraints) {
  for (size_t g = 0; g < constraints.groups.size(); ++g) {
    auto& group = constraints.groups[g];
    if (group.empty()) throw MalformedInput("group " + std::to_string(g) + " is empty");
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
  std::vector<std::pair<int, int>> order;
  std::set<std::pair<int, int>> seen;
  for (const auto& arc : constraints.order) {
    if (arc.first == arc.second) continue;
    if (seen.insert(arc).second) order.push_back(arc);
  }
  constraints.order = std::move(order);
  return constraints;
}

bool Instance::one_sided() const {
  return std::all_of(candidates.begin(), candidates.end(),
                     [](const Candidate& c) { return c.side == Side::Right; });
}

std::optional<Rational> Instance::uniform_height() const {
  if (sites.empty()) return std::nullopt;
  for (const auto& s : sites) {
    if (s.label_height != sites.front().label_height) return std::nullopt;
  }
  return sites.front().label_height;
}

std::optional<std::pair<int, int>> general_position_violation(const std::vector<Site>& sites) {
  std::map<Rational, int> xs;
  std::map<Rational, int> ys;
  for (const auto& s : sites) {
    auto [xi, x_new] = xs.emplace(s.x, s.id);
    if (!x_new) return std::make_pair(xi->second, s.id);
    auto [yi, y_new] = ys.emplace(s.y, s.id);
    if (!y_new) return std::make_pair(yi->second, s.id);
  }
  return std::nullopt;
}

static bool reduced(const Rational& q) {
  if (q.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

static void require_reduced(const Rational& q, const std::string& what) {
  if (!reduced(q)) throw MalformedInput(what + " is not a fraction in lowest terms (" + q.get_str() + ")");
}

void validate_instance(const Instance& inst) {
  const Boundary& b = inst.boundary;
  require_reduced(b.x_left, "boundary x_left");
  require_reduced(b.x_right, "boundary x_right");
  require_reduced(b.y_bottom, "boundary y_bottom");
  require_reduced(b.y_top, "boundary y_top");
  if (inst.v_min) require_reduced(*inst.v_min, "v_min");
  if (!(b.x_left < b.x_right) || !(b.y_bottom < b.y_top)) {
    throw MalformedInput("boundary box is empty");
  }
  const int n = inst.site_count();
  for (int i = 0; i < n; ++i) {
    const Site& s = inst.sites[i];
    const std::string name = "site " + std::to_string(s.id);
    if (s.id != i) throw MalformedInput("site ids must be 0..n-1 in order; found " + std::to_string(s.id) + " at position " + std::to_string(i));
    require_reduced(s.x, name + " x");
    require_reduced(s.y, name + " y");
    require_reduced(s.label_height, name + " label height");
    if (s.label_height <= 0) throw MalformedInput(name + " has non-positive label height");
    if (!(b.x_left < s.x && s.x < b.x_right && b.y_bottom < s.y && s.y < b.y_top)) {
      throw MalformedInput(name + " is not strictly inside the boundary");
    }
  }
  if (auto clash = general_position_violation(inst.sites)) {
    throw MalformedInput("sites " + std::to_string(clash->first) + " and " + std::to_string(clash->second) +
                         " share a coordinate (general position violated)");
  }
  std::set<std::pair<Side, Rational>> spots;
  for (int i = 0; i < inst.candidate_count(); ++i) {
    const Candidate& c = inst.candidates[i];
    const std::string name = "candidate " + std::to_string(c.id);
    if (c.id != i) throw MalformedInput("candidate ids must be 0..m-1 in order; found " + std::to_string(c.id) + " at position " + std::to_string(i));
    require_reduced(c.y, name + " y");
    if (c.y < b.y_bottom || c.y > b.y_top) throw MalformedInput(name + " lies outside the boundary side");
    if (!spots.emplace(c.side, c.y).second) throw MalformedInput(name + " duplicates another candidate");
  }
  if (inst.mode == CandidateMode::Sliding && !inst.candidates.empty()) {
    throw MalformedInput("sliding instances take no candidate list");
  }
  auto check_id = [n](int id, const std::string& where) {
    if (id < 0 || id >= n) throw MalformedInput(where + " refers to unknown site " + std::to_string(id));
  };
  for (size_t g = 0; g < inst.constraints.groups.size(); ++g) {
    if (inst.constraints.groups[g].empty()) throw MalformedInput("group " + std::to_string(g) + " is empty");
    for (int id : inst.constraints.groups[g]) check_id(id, "group " + std::to_string(g));
  }
  for (size_t r = 0; r < inst.constraints.order.size(); ++r) {
    check_id(inst.constraints.order[r].first, "order pair " + std::to_string(r));
    check_id(inst.constraints.order[r].second, "order pair " + std::to_string(r));
  }
  if (inst.v_min && *inst.v_min <= 0) throw MalformedInput("v_min must be positive");
}

PoLeader make_leader(const Site& site, const Candidate& candidate) {
  return make_leader(site, candidate.side, candidate.y);
}

PoLeader make_leader(const Site& site, Side side, const Rational& ref_y) {
  return PoLeader{site.x, site.y, side, ref_y};
}

std::vector<Segment> leader_segments(const PoLeader& l, const Boundary& boundary) {
  std::vector<Segment> out;
  if (l.site_y != l.ref_y) {
    out.push_back(Segment{l.site_x, std::min(l.site_y, l.ref_y), l.site_x, std::max(l.site_y, l.ref_y)});
  }
  const Rational& bx = boundary.side_x(l.side);
  out.push_back(Segment{std::min(l.site_x, bx), l.ref_y, std::max(l.site_x, bx), l.ref_y});
  return out;
}

Rational leader_length(const PoLeader& l, const Boundary& boundary) {
  return abs(l.site_y - l.ref_y) + abs(boundary.side_x(l.side) - l.site_x);
}

int leader_bends(const PoLeader& l) { return l.site_y == l.ref_y ? 0 : 1; }

bool labels_overlap(const Rational& y1, const Rational& h1, const Rational& y2, const Rational& h2) {
  return abs(y1 - y2) * 2 < h1 + h2;
}

bool labels_overlap(const Candidate& c1, const Rational& h1, const Candidate& c2, const Rational& h2) {
  return labels_overlap(c1.y, h1, c2.y, h2);
}

namespace {

// Segments are normalized so x0 <= x1 and y0 <= y1.
bool segments_conflict(const Segment& a, const Segment& b) {
  if (a.vertical() && b.vertical()) {
    return a.x0 == b.x0 && std::min(a.y1, b.y1) > std::max(a.y0, b.y0);
  }
  if (!a.vertical() && !b.vertical()) {
    return a.y0 == b.y0 && std::min(a.x1, b.x1) > std::max(a.x0, b.x0);
  }
  const Segment& v = a.vertical() ? a : b;
  const Segment& h = a.vertical() ? b : a;
  return h.x0 < v.x0 && v.x0 < h.x1 && v.y0 < h.y0 && h.y0 < v.y1;
}

}  // namespace

bool leaders_conflict(const PoLeader& a, const PoLeader& b, const Boundary& boundary) {
  for (const auto& sa : leader_segments(a, boundary)) {
    for (const auto& sb : leader_segments(b, boundary)) {
      if (segments_conflict(sa, sb)) return true;
    }
  }
  return false;
}

bool leader_crosses_site(const PoLeader& l, const Site& other, const Boundary& boundary) {
  if (other.y != l.ref_y) return false;
  const Rational& bx = boundary.side_x(l.side);
  return (l.site_x < other.x && other.x < bx) || (bx < other.x && other.x < l.site_x);
}

Rational objective_of(const PoLeader& l, ObjectiveKind kind, const Boundary& boundary) {
  return kind == ObjectiveKind::Length ? leader_length(l, boundary) : Rational(leader_bends(l));
}

Rational labeling_objective(const Instance& instance, const Labeling& labeling) {
  Rational total = 0;
  for (size_t i = 0; i < labeling.placements.size(); ++i) {
    const Placement& p = labeling.placements[i];
    total += objective_of(make_leader(instance.sites[i], p.side, p.y), instance.objective, instance.boundary);
  }
  return total;
}

}  // namespace leaderline
