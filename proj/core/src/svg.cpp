#include "leaderline/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace leaderline {
namespace {

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#76b7b2",
                                "#edc948", "#9c755f", "#ff9da7", "#bab0ac", "#e15759"};

class Canvas {
 public:
  Canvas(const Instance& inst, const Labeling* labeling) {
    Rational lo = inst.boundary.y_bottom;
    Rational hi = inst.boundary.y_top;
    Rational max_h = 0;
    for (const auto& s : inst.sites) max_h = std::max(max_h, s.label_height);
    if (labeling) {
      for (size_t i = 0; i < labeling->placements.size(); ++i) {
        const auto& p = labeling->placements[i];
        lo = std::min(lo, Rational(p.y - inst.sites[i].label_height / 2));
        hi = std::max(hi, Rational(p.y + inst.sites[i].label_height / 2));
      }
    }
    for (const auto& c : inst.candidates) {
      lo = std::min(lo, Rational(c.y - max_h / 2));
      hi = std::max(hi, Rational(c.y + max_h / 2));
    }
    y_lo_ = to_double(lo);
    y_hi_ = to_double(hi);
    double width = to_double(inst.boundary.x_right - inst.boundary.x_left);
    label_w_ = std::max(width / 6, 1e-9);
    x_lo_ = to_double(inst.boundary.x_left) - label_w_;
    x_hi_ = to_double(inst.boundary.x_right) + label_w_;
    double span = std::max(x_hi_ - x_lo_, y_hi_ - y_lo_);
    scale_ = span > 0 ? 600.0 / span : 1.0;
  }

  double x(double v) const { return kMargin + (v - x_lo_) * scale_; }
  double y(double v) const { return kMargin + (y_hi_ - v) * scale_; }
  double x(const Rational& v) const { return x(to_double(v)); }
  double y(const Rational& v) const { return y(to_double(v)); }
  double len(double v) const { return v * scale_; }
  double width() const { return 2 * kMargin + (x_hi_ - x_lo_) * scale_; }
  double height() const { return 2 * kMargin + (y_hi_ - y_lo_) * scale_; }
  double label_width() const { return label_w_; }

 private:
  static constexpr double kMargin = 20.0;
  double x_lo_ = 0, x_hi_ = 1, y_lo_ = 0, y_hi_ = 1, scale_ = 1, label_w_ = 1;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

void marker(std::ostringstream& os, double cx, double cy) {
  os << "  <circle class=\"violation\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
     << "\" r=\"6\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const Labeling* labeling, const VerifyReport* report) {
  Canvas cv(inst, labeling);
  std::ostringstream os;
  const auto& b = inst.boundary;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(cv.width()) << "\" height=\"" << fmt(cv.height())
     << "\" viewBox=\"0 0 " << fmt(cv.width()) << ' ' << fmt(cv.height()) << "\">\n";
  os << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>\n";
  os << "  <rect class=\"boundary\" x=\"" << fmt(cv.x(b.x_left)) << "\" y=\"" << fmt(cv.y(b.y_top)) << "\" width=\""
     << fmt(cv.x(b.x_right) - cv.x(b.x_left)) << "\" height=\"" << fmt(cv.y(b.y_bottom) - cv.y(b.y_top))
     << "\" fill=\"none\" stroke=\"#000\"/>\n";

  for (const auto& c : inst.candidates) {
    double bx = cv.x(b.side_x(c.side));
    double dx = c.side == Side::Right ? 4 : -4;
    os << "  <line class=\"candidate\" x1=\"" << fmt(bx) << "\" y1=\"" << fmt(cv.y(c.y)) << "\" x2=\"" << fmt(bx + dx)
       << "\" y2=\"" << fmt(cv.y(c.y)) << "\" stroke=\"#999\"/>\n";
  }

  if (labeling) {
    const auto& pl = labeling->placements;
    const double lw = cv.label_width();
    for (size_t g = 0; g < inst.constraints.groups.size(); ++g) {
      const auto& group = inst.constraints.groups[g];
      const Side side = pl[group.front()].side;
      if (!std::all_of(group.begin(), group.end(), [&](int s) { return pl[s].side == side; })) continue;
      Rational lo = pl[group.front()].y;
      Rational hi = lo;
      for (int s : group) {
        lo = std::min(lo, Rational(pl[s].y - inst.sites[s].label_height / 2));
        hi = std::max(hi, Rational(pl[s].y + inst.sites[s].label_height / 2));
      }
      double edge = to_double(b.side_x(side)) + (side == Side::Right ? lw : -lw);
      double band = lw / 8;
      double left = side == Side::Right ? edge - band * (g % 4 + 1) : edge + band * (g % 4);
      os << "  <rect class=\"group\" x=\"" << fmt(cv.x(left)) << "\" y=\"" << fmt(cv.y(hi)) << "\" width=\""
         << fmt(cv.len(band)) << "\" height=\"" << fmt(cv.y(lo) - cv.y(hi)) << "\" fill=\"" << kPalette[g % 10]
         << "\" fill-opacity=\"0.5\"/>\n";
    }
    for (size_t i = 0; i < pl.size(); ++i) {
      const Site& s = inst.sites[i];
      double bx = to_double(b.side_x(pl[i].side));
      double left = pl[i].side == Side::Right ? bx : bx - lw;
      os << "  <rect class=\"label\" x=\"" << fmt(cv.x(left)) << "\" y=\"" << fmt(cv.y(pl[i].y + s.label_height / 2))
         << "\" width=\"" << fmt(cv.len(lw)) << "\" height=\"" << fmt(cv.len(to_double(s.label_height)))
         << "\" fill=\"#fff\" stroke=\"#333\"/>\n";
    }
    for (size_t i = 0; i < pl.size(); ++i) {
      const Site& s = inst.sites[i];
      os << "  <polyline class=\"leader\" points=\"" << fmt(cv.x(s.x)) << ',' << fmt(cv.y(s.y));
      if (s.y != pl[i].y) os << ' ' << fmt(cv.x(s.x)) << ',' << fmt(cv.y(pl[i].y));
      os << ' ' << fmt(cv.x(b.side_x(pl[i].side))) << ',' << fmt(cv.y(pl[i].y)) << "\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
    }
  }
  for (auto [from, to] : inst.constraints.order) {
    const Site& a = inst.sites[from];
    const Site& c = inst.sites[to];
    os << "  <line class=\"order\" x1=\"" << fmt(cv.x(a.x)) << "\" y1=\"" << fmt(cv.y(a.y)) << "\" x2=\""
       << fmt(cv.x(c.x)) << "\" y2=\"" << fmt(cv.y(c.y))
       << "\" stroke=\"#555\" stroke-dasharray=\"4 3\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (const auto& s : inst.sites) {
    os << "  <circle class=\"site\" cx=\"" << fmt(cv.x(s.x)) << "\" cy=\"" << fmt(cv.y(s.y))
       << "\" r=\"3\" fill=\"#000\"/>\n";
  }

  if (labeling && report) {
    const auto& pl = labeling->placements;
    for (auto [i, j] : report->leader_leader) {
      PoLeader a = make_leader(inst.sites[i], pl[i].side, pl[i].y);
      PoLeader c = make_leader(inst.sites[j], pl[j].side, pl[j].y);
      for (const auto& sa : leader_segments(a, b)) {
        for (const auto& sc : leader_segments(c, b)) {
          if (sa.vertical() == sc.vertical()) {
            if (sa.vertical() ? sa.x0 != sc.x0 : sa.y0 != sc.y0) continue;
            Rational from = sa.vertical() ? std::max(sa.y0, sc.y0) : std::max(sa.x0, sc.x0);
            Rational to = sa.vertical() ? std::min(sa.y1, sc.y1) : std::min(sa.x1, sc.x1);
            if (from >= to) continue;
            Rational mid = (from + to) / 2;
            if (sa.vertical()) marker(os, cv.x(sa.x0), cv.y(mid));
            else marker(os, cv.x(mid), cv.y(sa.y0));
            continue;
          }
          const Segment& v = sa.vertical() ? sa : sc;
          const Segment& h = sa.vertical() ? sc : sa;
          if (h.x0 < v.x0 && v.x0 < h.x1 && v.y0 < h.y0 && h.y0 < v.y1) marker(os, cv.x(v.x0), cv.y(h.y0));
        }
      }
    }
    for (auto [i, j] : report->leader_site) marker(os, cv.x(inst.sites[j].x), cv.y(inst.sites[j].y));
    for (auto [i, j] : report->separation) marker(os, cv.x(inst.sites[j].x), cv.y(inst.sites[j].y));
    for (auto [i, j] : report->label_overlaps) {
      double bx = cv.x(b.side_x(pl[i].side));
      marker(os, bx, cv.y((pl[i].y + pl[j].y) / 2));
    }
    for (auto [i, j] : report->order_violations) {
      marker(os, cv.x(b.side_x(pl[i].side)), cv.y(pl[i].y));
    }
    for (const auto& g : report->group_violations) {
      for (int s : inst.constraints.groups[g.group]) marker(os, cv.x(b.side_x(pl[s].side)), cv.y(pl[s].y));
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace leaderline
