#include "leaderline/sliding.hpp"

#include <algorithm>

#include "leaderline/errors.hpp"

namespace leaderline {
namespace {

std::vector<Rational> offsets_around(const std::vector<Site>& sites, const Rational& h, const Rational& offset) {
  const int n = static_cast<int>(sites.size());
  std::vector<Rational> out;
  for (const auto& s : sites) {
    for (int i = -n; i <= n; ++i) {
      Rational base = s.y + h * i;
      out.push_back(base);
      out.push_back(base + offset);
      out.push_back(base - offset);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Rational min_gap_d(const std::vector<Site>& sites, const Rational& h) {
  if (sites.size() < 2) throw MalformedInput("the gap d needs at least two sites");
  if (h <= 0) throw MalformedInput("label height must be positive");
  std::optional<Rational> best;
  for (size_t i = 0; i < sites.size(); ++i) {
    for (size_t j = i + 1; j < sites.size(); ++j) {
      Rational dist = abs(sites[i].y - sites[j].y);
      Rational rest = dist - floor(dist / h) * h;
      if (!best || rest < *best) best = rest;
    }
  }
  if (*best == 0) throw MalformedInput("some vertical site distance is a multiple of the label height (d = 0)");
  return *best;
}

std::vector<Rational> canonical_candidates(const std::vector<Site>& sites, const Rational& h, const Rational& epsilon) {
  return offsets_around(sites, h, epsilon);
}

std::vector<Rational> canonical_candidates_vmin(const std::vector<Site>& sites, const Rational& h,
                                                const Rational& v_min) {
  return offsets_around(sites, h, v_min);
}

Discretization discretize(const Instance& instance, std::optional<Rational> epsilon) {
  if (instance.mode != CandidateMode::Sliding) throw MalformedInput("discretization needs a sliding instance");
  auto h = instance.uniform_height();
  if (!h && !instance.sites.empty()) throw MalformedInput("sliding instances need uniform label heights");
  Discretization out;
  out.h = h ? *h : Rational(1);
  out.d = instance.sites.size() < 2 ? out.h : min_gap_d(instance.sites, out.h);
  out.epsilon = epsilon ? *epsilon : Rational(out.d / 2);
  if (out.epsilon <= 0 || out.epsilon >= out.d) throw MalformedInput("epsilon must lie strictly between 0 and d");
  out.v_min = instance.v_min;
  out.candidates = out.v_min ? canonical_candidates_vmin(instance.sites, out.h, *out.v_min)
                             : canonical_candidates(instance.sites, out.h, out.epsilon);
  return out;
}

Instance discretized_instance(const Instance& instance, const Discretization& discretization) {
  Instance fixed = instance;
  fixed.mode = CandidateMode::Fixed;
  fixed.candidates.clear();
  for (const auto& y : discretization.candidates) {
    fixed.candidates.push_back(Candidate{static_cast<int>(fixed.candidates.size()), Side::Right, y});
    if (y < fixed.boundary.y_bottom) fixed.boundary.y_bottom = y;
    if (y > fixed.boundary.y_top) fixed.boundary.y_top = y;
  }
  return fixed;
}

std::optional<Solution> solve_sliding(const Instance& instance, const SolveOptions& options, SolveStats* stats,
                                      std::optional<Rational> epsilon) {
  validate_instance(instance);
  if (instance.objective == ObjectiveKind::Length && !instance.v_min) {
    throw MalformedInput("length minimization with sliding candidates needs v_min");
  }
  Discretization disc = discretize(instance, epsilon);
  Instance fixed = discretized_instance(instance, disc);
  auto solution = solve_fixed(fixed, options, stats);
  if (solution) {
    for (auto& p : solution->labeling.placements) p.candidate = -1;
  }
  return solution;
}

}  // namespace leaderline
