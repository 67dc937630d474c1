#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leaderline/rational.hpp"

namespace leaderline {

enum class Side { Left, Right };
enum class ObjectiveKind { Length, Bends };
enum class CandidateMode { Fixed, Sliding };

std::string to_string(Side side);
std::string to_string(ObjectiveKind kind);
std::string to_string(CandidateMode mode);

struct Site {
  int id = 0;
  Rational x;
  Rational y;
  Rational label_height;
};

// A fixed reference point on the left or right boundary side.
struct Candidate {
  int id = 0;
  Side side = Side::Right;
  Rational y;
};

struct Boundary {
  Rational x_left;
  Rational x_right;
  Rational y_bottom;
  Rational y_top;

  const Rational& side_x(Side side) const { return side == Side::Left ? x_left : x_right; }
};

// Grouping constraints and the ordering relation. `order` holds pairs
// (a, b) meaning a's label must not be below b's label when both are on the
// same side.
struct Constraints {
  std::vector<std::vector<int>> groups;
  std::vector<std::pair<int, int>> order;

  bool empty() const { return groups.empty() && order.empty(); }
};

// Sorts and deduplicates group members, drops reflexive and duplicate order
// pairs. Throws MalformedInput for an empty group.
Constraints normalize_constraints(Constraints constraints);

struct Instance {
  Boundary boundary;
  std::vector<Site> sites;
  CandidateMode mode = CandidateMode::Fixed;
  std::vector<Candidate> candidates;
  Constraints constraints;
  ObjectiveKind objective = ObjectiveKind::Length;
  std::optional<Rational> v_min;

  int site_count() const { return static_cast<int>(sites.size()); }
  int candidate_count() const { return static_cast<int>(candidates.size()); }
  bool one_sided() const;
  // The common label height, if all labels share one.
  std::optional<Rational> uniform_height() const;
};

// Full structural validation: ids are 0..n-1 in order, positive label
// heights, general position, sites strictly inside the boundary, distinct
// candidates per side, constraint ids in range. Throws MalformedInput with a
// diagnostic naming the offending items.
void validate_instance(const Instance& instance);

// Returns the first pair of sites sharing an x- or y-coordinate, if any.
std::optional<std::pair<int, int>> general_position_violation(const std::vector<Site>& sites);

// Geometry of a po-leader: a vertical piece at the site's x from the site
// to the reference height, then a horizontal piece to the boundary side.
struct PoLeader {
  Rational site_x;
  Rational site_y;
  Side side = Side::Right;
  Rational ref_y;
};

PoLeader make_leader(const Site& site, const Candidate& candidate);
PoLeader make_leader(const Site& site, Side side, const Rational& ref_y);

struct Segment {
  Rational x0, y0, x1, y1;

  bool vertical() const { return x0 == x1; }
};

// One or two axis-parallel segments; the vertical one is omitted when the
// leader is straight.
std::vector<Segment> leader_segments(const PoLeader& leader, const Boundary& boundary);

Rational leader_length(const PoLeader& leader, const Boundary& boundary);
int leader_bends(const PoLeader& leader);

// Open-rectangle overlap of two labels on the same side with fixed ports.
bool labels_overlap(const Rational& y1, const Rational& h1, const Rational& y2, const Rational& h2);
bool labels_overlap(const Candidate& c1, const Rational& h1, const Candidate& c2, const Rational& h2);

// True iff the two leaders intersect in a point interior to a segment of
// each, or overlap collinearly with positive length.
bool leaders_conflict(const PoLeader& a, const PoLeader& b, const Boundary& boundary);

// True iff `other` lies on the horizontal segment, strictly between the
// leader's site and the boundary.
bool leader_crosses_site(const PoLeader& leader, const Site& other, const Boundary& boundary);

Rational objective_of(const PoLeader& leader, ObjectiveKind kind, const Boundary& boundary);

struct Placement {
  Side side = Side::Right;
  Rational y;
  int candidate = -1;  // -1 when the reference point is not from the candidate list
};

// Indexed by site id.
struct Labeling {
  std::vector<Placement> placements;
};

Rational labeling_objective(const Instance& instance, const Labeling& labeling);

}  // namespace leaderline
