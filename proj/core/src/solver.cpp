#include "leaderline/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "leaderline/errors.hpp"
#include "leaderline/pqtree.hpp"

namespace leaderline {
namespace {

// Transitive reduction of the order relation, or nullopt when it is cyclic.
std::optional<std::vector<std::pair<int, int>>> reduce_order(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> succ(n);
  for (auto [u, w] : arcs) {
    if (u == w) continue;
    succ[u].push_back(w);
  }
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack = succ[s];
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (reach[s][v]) continue;
      reach[s][v] = 1;
      for (int w : succ[v]) stack.push_back(w);
    }
    if (reach[s][s]) return std::nullopt;
  }
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (!reach[u][w]) continue;
      bool implied = false;
      for (int v = 0; v < n && !implied; ++v) implied = v != w && reach[u][v] && reach[v][w];
      if (!implied) out.emplace_back(u, w);
    }
  }
  return out;
}

enum Tag : char { kOut = 0, kAbove = 1, kBelow = 2, kLeft = 3 };
enum ArcTag : char { kNone = 0, kSelf = 1, kArcAbove = 2, kArcBelow = 3 };

struct Entry {
  bool feasible = false;
  Rational value;
  int best = -1;  // candidate rank chosen for the leftmost site
};

}  // namespace

struct FixedSolver::Impl {
  const Instance& inst;
  SolveOptions options;
  SolveStats stats;
  int n = 0;
  int m = 0;
  int top_site = 0;
  int bottom_site = 0;

  // Sites 0..n-1 are real, n and n+1 are the top and bottom sentinels.
  std::vector<Rational> sx, sy, sh;
  std::vector<int> xrank;
  // Candidates by rank: 0 is the bottom sentinel, 1..m ascending y, m+1 the top sentinel.
  std::vector<Rational> cy;
  std::vector<int> cand_id;
  std::vector<int> rank_of;
  std::vector<int> site_at_rank;
  std::vector<int> by_y_desc;
  std::vector<int> lt;  // ranks strictly below the site's y
  std::vector<int> le;  // ranks at or below the site's y
  std::vector<char> vmin_ok;

  bool consistent = true;
  bool constrained = false;
  std::optional<PQAGraph> graph;
  std::vector<std::vector<std::pair<int, int>>> arcs_at;

  std::unordered_map<std::uint64_t, Entry> memo;
  std::unordered_map<std::uint64_t, bool> respects_memo;

  std::vector<char> tag;
  std::vector<char> arc_tag;
  std::vector<int> cnt_a, cnt_b;

  Impl(const Instance& instance, SolveOptions opts) : inst(instance), options(opts) {
    validate_instance(inst);
    if (inst.mode != CandidateMode::Fixed) throw MalformedInput("the fixed-candidate solver needs a fixed instance");
    if (!inst.one_sided()) throw MalformedInput("the fixed-candidate solver handles one-sided instances only");
    n = inst.site_count();
    m = inst.candidate_count();
    if (m < n) throw MalformedInput("fewer candidates than sites");
    if (n + 2 >= (1 << 12) || m + 2 >= (1 << 20)) throw MalformedInput("instance too large for the solver");
    build_geometry();
    build_constraints();
  }

  void build_geometry() {
    Rational max_h = 0;
    Rational min_x = 0;
    Rational lo = 0;
    Rational hi = 0;
    bool first = true;
    auto extend = [&](const Rational& y) {
      if (first || y < lo) lo = y;
      if (first || y > hi) hi = y;
      first = false;
    };
    for (const auto& s : inst.sites) {
      if (s.label_height > max_h) max_h = s.label_height;
      if (&s == &inst.sites.front() || s.x < min_x) min_x = s.x;
      extend(s.y);
    }
    for (const auto& c : inst.candidates) extend(c.y);
    top_site = n;
    bottom_site = n + 1;
    for (const auto& s : inst.sites) {
      sx.push_back(s.x);
      sy.push_back(s.y);
      sh.push_back(s.label_height);
    }
    sx.push_back(min_x - 1);
    sy.push_back(hi + 1);
    sh.push_back(0);
    sx.push_back(min_x - 2);
    sy.push_back(lo - 1);
    sh.push_back(0);

    std::vector<int> order(n + 2);
    for (int i = 0; i < n + 2; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sx[a] < sx[b]; });
    xrank.assign(n + 2, 0);
    for (int i = 0; i < n + 2; ++i) xrank[order[i]] = i;

    std::vector<int> cands(m);
    for (int i = 0; i < m; ++i) cands[i] = i;
    std::sort(cands.begin(), cands.end(), [&](int a, int b) { return inst.candidates[a].y < inst.candidates[b].y; });
    cy.push_back(lo - max_h - 1);
    cand_id.push_back(kBottomSentinel);
    for (int c : cands) {
      cy.push_back(inst.candidates[c].y);
      cand_id.push_back(c);
    }
    cy.push_back(hi + max_h + 1);
    cand_id.push_back(kTopSentinel);
    rank_of.assign(m, 0);
    for (int r = 1; r <= m; ++r) rank_of[cand_id[r]] = r;

    by_y_desc.resize(n);
    for (int i = 0; i < n; ++i) by_y_desc[i] = i;
    std::sort(by_y_desc.begin(), by_y_desc.end(), [&](int a, int b) { return sy[a] > sy[b]; });
    lt.assign(n + 2, 0);
    le.assign(n + 2, 0);
    site_at_rank.assign(m + 2, -1);
    for (int s = 0; s < n; ++s) {
      lt[s] = static_cast<int>(std::lower_bound(cy.begin(), cy.end(), sy[s]) - cy.begin());
      le[s] = static_cast<int>(std::upper_bound(cy.begin(), cy.end(), sy[s]) - cy.begin());
      if (le[s] > lt[s]) site_at_rank[lt[s]] = s;
    }

    if (inst.v_min) {
      vmin_ok.assign(static_cast<size_t>(n) * (m + 2), 1);
      for (int s = 0; s < n; ++s) {
        for (int r = 1; r <= m; ++r) {
          for (int o = 0; o < n; ++o) {
            if (o != s && sx[o] > sx[s] && abs(sy[o] - cy[r]) < *inst.v_min) {
              vmin_ok[static_cast<size_t>(s) * (m + 2) + r] = 0;
              break;
            }
          }
        }
      }
    }
  }

  void build_constraints() {
    constrained = !inst.constraints.empty();
    if (!constrained || n == 0) return;
    auto tree = PQTree::build(n, inst.constraints.groups);
    auto arcs = reduce_order(n, inst.constraints.order);
    if (!tree || !arcs || !reorder_feasible(*tree, *arcs)) {
      consistent = false;
      return;
    }
    graph.emplace(std::move(*tree), std::move(*arcs));
    arcs_at.assign(graph->tree().node_count(), {});
    for (auto [u, w] : graph->arcs()) arcs_at[graph->lca(u, w)].emplace_back(u, w);
    tag.assign(n, kOut);
    arc_tag.assign(n, kNone);
    cnt_a.assign(graph->tree().node_count(), 0);
    cnt_b.assign(graph->tree().node_count(), 0);
  }

  int ext_site(int id) const {
    if (id == kTopSentinel) return top_site;
    if (id == kBottomSentinel) return bottom_site;
    if (id < 0 || id >= n) throw MalformedInput("unknown site " + std::to_string(id));
    return id;
  }

  int ext_rank(int id) const {
    if (id == kTopSentinel) return m + 1;
    if (id == kBottomSentinel) return 0;
    if (id < 0 || id >= m) throw MalformedInput("unknown candidate " + std::to_string(id));
    return rank_of[id];
  }

  // Sites of the sub-instance, top to bottom.
  std::vector<int> block(int s1, int c1, int s2, int c2) const {
    std::vector<int> out;
    const int thr = std::max(xrank[s1], xrank[s2]);
    for (int s : by_y_desc) {
      if (xrank[s] > thr && c2 < lt[s] && c1 >= le[s]) out.push_back(s);
    }
    return out;
  }

  static int leftmost(const std::vector<int>& sites, const std::vector<int>& xr) {
    int best = sites.front();
    for (int s : sites) {
      if (xr[s] < xr[best]) best = s;
    }
    return best;
  }

  // Lowest and highest candidate rank the leftmost site may use without its
  // label overlapping the bounding labels.
  std::pair<int, int> label_window(int s1, int c1, int s2, int c2, int sl) const {
    Rational low = cy[c2] + (sh[s2] + sh[sl]) / 2;
    Rational high = cy[c1] - (sh[s1] + sh[sl]) / 2;
    int lo = static_cast<int>(std::lower_bound(cy.begin() + c2 + 1, cy.begin() + c1, low) - cy.begin());
    int hi = static_cast<int>(std::upper_bound(cy.begin() + c2 + 1, cy.begin() + c1, high) - cy.begin()) - 1;
    return {lo, hi};
  }

  // `sites` is the sub-instance top to bottom; the first `prefix` of them lie
  // above the leftmost site's label.
  bool respects(int s1, int s2, int sl, const std::vector<int>& sites, int prefix) {
    if (!constrained) return true;
    ++stats.constraint_checks;
    std::uint64_t key = 0;
    if (options.memoize_constraint_checks) {
      key = (static_cast<std::uint64_t>(s1) << 48) | (static_cast<std::uint64_t>(s2) << 36) |
            (static_cast<std::uint64_t>(sites.front()) << 24) | (static_cast<std::uint64_t>(sites.back()) << 12) |
            static_cast<std::uint64_t>(prefix);
      if (auto it = respects_memo.find(key); it != respects_memo.end()) {
        ++stats.constraint_cache_hits;
        return it->second;
      }
    }
    int total_a = 0;
    int total_b = 0;
    for (size_t i = 0; i < sites.size(); ++i) {
      tag[sites[i]] = static_cast<int>(i) < prefix ? kAbove : kBelow;
    }
    tag[sl] = kLeft;
    for (int s : sites) {
      total_a += tag[s] == kAbove;
      total_b += tag[s] == kBelow;
    }
    bool ok = walk(s1 < n ? s1 : -1, s2 < n ? s2 : -1, sl, total_a, total_b);
    for (int s : sites) {
      tag[s] = kOut;
      arc_tag[s] = kNone;
    }
    if (options.memoize_constraint_checks) respects_memo.emplace(key, ok);
    return ok;
  }

  bool walk(int s1, int s2, int sl, int total_a, int total_b) {
    const PQTree& tree = graph->tree();
    for (int v = tree.node_count() - 1; v >= 0; --v) {
      const PQNode& node = tree.node(v);
      if (node.kind == PQNode::Kind::Leaf) {
        cnt_a[v] = tag[node.site] == kAbove;
        cnt_b[v] = tag[node.site] == kBelow;
        continue;
      }
      int a = 0;
      int b = 0;
      for (int c : node.children) {
        a += cnt_a[c];
        b += cnt_b[c];
      }
      cnt_a[v] = a;
      cnt_b[v] = b;
    }
    auto has = [&](int site, int v) { return site >= 0 && graph->in_subtree(site, v); };
    int stop = tree.root();
    if (s1 >= 0 && s2 >= 0) {
      stop = graph->lca(s1, s2);
      if (!graph->in_subtree(sl, stop)) return false;
    }
    // A group without the leftmost site may not straddle it, nor reach past
    // a bounding site into the far side.
    auto splits = [&](bool t, bool u, int a, int b) {
      return (t && u) || (t && b > 0) || (u && a > 0) || (a > 0 && b > 0);
    };
    auto covers = [&](bool t, bool u, int a, int b) {
      return (!t || a == total_a) && (!u || b == total_b);
    };

    arc_tag[sl] = kSelf;
    std::vector<int> marked;
    for (int v = tree.leaf(sl); v != stop;) {
      const int t = tree.node(v).parent;
      const PQNode& node = tree.node(t);
      if (!covers(has(s1, t), has(s2, t), cnt_a[t], cnt_b[t])) return false;
      for (int c : node.children) {
        if (c != v && splits(has(s1, c), has(s2, c), cnt_a[c], cnt_b[c])) return false;
      }
      if (node.kind == PQNode::Kind::Q) {
        for (size_t j = 0; j + 1 < node.children.size(); ++j) {
          int p = node.children[j];
          int q = node.children[j + 1];
          bool t1 = has(s1, p) || has(s1, q);
          bool u1 = has(s2, p) || has(s2, q);
          int a = cnt_a[p] + cnt_a[q];
          int b = cnt_b[p] + cnt_b[q];
          bool ok = (p == v || q == v) ? covers(t1, u1, a, b) : !splits(t1, u1, a, b);
          if (!ok) return false;
        }
      }
      marked.clear();
      for (int c : node.children) {
        if (c == v) continue;
        char side = cnt_a[c] > 0 ? kArcAbove : (cnt_b[c] > 0 ? kArcBelow : kNone);
        if (side == kNone) continue;
        for (int s : graph->group(c)) {
          if (tag[s] != kOut) {
            arc_tag[s] = side;
            marked.push_back(s);
          }
        }
      }
      for (auto [u, w] : arcs_at[t]) {
        char tu = arc_tag[u];
        char tw = arc_tag[w];
        if ((tu == kArcBelow && (tw == kSelf || tw == kArcAbove)) || (tu == kSelf && tw == kArcAbove)) return false;
      }
      for (int s : marked) arc_tag[s] = kSelf;
      v = t;
    }
    return true;
  }

  bool criteria(int s1, int c1, int s2, int c2, const std::vector<int>& sites, int sl, int r, int prefix,
                const std::pair<int, int>& window) {
    ++stats.admissibility_checks;
    if (r < window.first || r > window.second) return false;
    int on_line = site_at_rank[r];
    if (on_line >= 0 && on_line != sl && xrank[on_line] > xrank[sl]) return false;
    if (inst.v_min && !vmin_ok[static_cast<size_t>(sl) * (m + 2) + r]) return false;
    const int above = prefix - (lt[sl] > r ? 1 : 0);
    const int below = static_cast<int>(sites.size()) - 1 - above;
    if (above > c1 - r - 1 || below > r - c2 - 1) return false;
    return respects(s1, s2, sl, sites, prefix);
  }

  static std::uint64_t state_key(int s1, int c1, int s2, int c2) {
    return (static_cast<std::uint64_t>(s1) << 52) | (static_cast<std::uint64_t>(s2) << 40) |
           (static_cast<std::uint64_t>(c1) << 20) | static_cast<std::uint64_t>(c2);
  }

  Rational cost(int site, int r) const {
    return objective_of(make_leader(inst.sites[site], Side::Right, cy[r]), inst.objective, inst.boundary);
  }

  const Entry& value(int s1, int c1, int s2, int c2) {
    const std::uint64_t key = state_key(s1, c1, s2, c2);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ++stats.states;
    Entry entry;
    std::vector<int> sites = block(s1, c1, s2, c2);
    if (sites.empty()) {
      entry.feasible = true;
      entry.value = 0;
    } else if (static_cast<int>(sites.size()) <= c1 - c2 - 1) {
      const int sl = leftmost(sites, xrank);
      const auto window = label_window(s1, c1, s2, c2, sl);
      int prefix = static_cast<int>(sites.size());
      for (int r = std::max(window.first, c2 + 1); r <= std::min(window.second, c1 - 1); ++r) {
        while (prefix > 0 && lt[sites[prefix - 1]] <= r) --prefix;
        if (!criteria(s1, c1, s2, c2, sites, sl, r, prefix, window)) continue;
        const Entry& upper = value(s1, c1, sl, r);
        if (!upper.feasible) continue;
        Rational upper_value = upper.value;
        const Entry& lower = value(sl, r, s2, c2);
        if (!lower.feasible) continue;
        Rational total = upper_value + lower.value + cost(sl, r);
        if (!entry.feasible || total < entry.value) {
          entry.feasible = true;
          entry.value = total;
          entry.best = r;
        }
      }
    }
    return memo.emplace(key, std::move(entry)).first->second;
  }

  void rebuild(int s1, int c1, int s2, int c2, Labeling& out) {
    std::vector<int> sites = block(s1, c1, s2, c2);
    if (sites.empty()) return;
    const Entry& entry = value(s1, c1, s2, c2);
    const int sl = leftmost(sites, xrank);
    const int r = entry.best;
    out.placements[sl] = Placement{Side::Right, cy[r], cand_id[r]};
    rebuild(s1, c1, sl, r, out);
    rebuild(sl, r, s2, c2, out);
  }
};

FixedSolver::FixedSolver(const Instance& instance, SolveOptions options)
    : impl_(std::make_unique<Impl>(instance, options)) {}

FixedSolver::~FixedSolver() = default;

bool FixedSolver::constraints_consistent() const { return impl_->consistent; }

std::vector<int> FixedSolver::sites_of(const SubInstance& sub) const {
  const Impl& d = *impl_;
  return d.block(d.ext_site(sub.s1), d.ext_rank(sub.c1), d.ext_site(sub.s2), d.ext_rank(sub.c2));
}

std::vector<int> FixedSolver::candidates_of(const SubInstance& sub) const {
  const Impl& d = *impl_;
  std::vector<int> out;
  for (int r = d.ext_rank(sub.c2) + 1; r < d.ext_rank(sub.c1); ++r) out.push_back(d.cand_id[r]);
  return out;
}

bool FixedSolver::respects_constraints(const SubInstance& sub, const Rational& label_y) {
  Impl& d = *impl_;
  if (!d.consistent) return false;
  const int s1 = d.ext_site(sub.s1);
  const int s2 = d.ext_site(sub.s2);
  std::vector<int> sites = d.block(s1, d.ext_rank(sub.c1), s2, d.ext_rank(sub.c2));
  if (sites.empty()) return true;
  const int sl = Impl::leftmost(sites, d.xrank);
  int prefix = 0;
  while (prefix < static_cast<int>(sites.size()) && d.sy[sites[prefix]] > label_y) ++prefix;
  return d.respects(s1, s2, sl, sites, prefix);
}

bool FixedSolver::admissible(const SubInstance& sub, int candidate) {
  Impl& d = *impl_;
  if (!d.consistent) return false;
  const int s1 = d.ext_site(sub.s1);
  const int s2 = d.ext_site(sub.s2);
  const int c1 = d.ext_rank(sub.c1);
  const int c2 = d.ext_rank(sub.c2);
  const int r = d.ext_rank(candidate);
  if (r <= c2 || r >= c1) return false;
  std::vector<int> sites = d.block(s1, c1, s2, c2);
  if (sites.empty()) return false;
  const int sl = Impl::leftmost(sites, d.xrank);
  int prefix = 0;
  while (prefix < static_cast<int>(sites.size()) && d.lt[sites[prefix]] > r) ++prefix;
  return d.criteria(s1, c1, s2, c2, sites, sl, r, prefix, d.label_window(s1, c1, s2, c2, sl));
}

std::optional<Solution> FixedSolver::solve() {
  Impl& d = *impl_;
  if (!d.consistent) return std::nullopt;
  const Entry& root = d.value(d.top_site, d.m + 1, d.bottom_site, 0);
  if (!root.feasible) return std::nullopt;
  Solution solution;
  solution.value = root.value;
  solution.labeling.placements.resize(d.n);
  d.rebuild(d.top_site, d.m + 1, d.bottom_site, 0, solution.labeling);
  return solution;
}

const SolveStats& FixedSolver::stats() const { return impl_->stats; }

std::optional<Solution> solve_fixed(const Instance& instance, const SolveOptions& options, SolveStats* stats) {
  FixedSolver solver(instance, options);
  auto result = solver.solve();
  if (stats) *stats = solver.stats();
  return result;
}

}  // namespace leaderline
