#include "leaderline/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "leaderline/errors.hpp"
#include "leaderline/verify.hpp"

namespace leaderline {

int default_oracle_site_limit() {
  if (const char* env = std::getenv("LEADERLINE_ORACLE_LIMIT")) {
    try {
      int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return 8;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
int popcount(const Bits& b) {
  int n = 0;
  for (auto w : b) n += std::popcount(w);
  return n;
}

class Search {
 public:
  Search(const Instance& inst, const OracleLimits& limits, bool counting)
      : inst_(inst), limits_(limits), counting_(counting), n_(inst.site_count()), m_(inst.candidate_count()) {
    validate_instance(inst_);
    cons_ = normalize_constraints(inst_.constraints);
    if (inst_.mode != CandidateMode::Fixed) throw MalformedInput("the oracle needs a fixed instance");
    if (n_ > limits_.max_sites) {
      throw LimitExceeded("oracle limited to " + std::to_string(limits_.max_sites) + " sites, instance has " +
                          std::to_string(n_));
    }
    words_ = (m_ + 63) / 64;
    assignment_.assign(n_, -1);
    used_.assign(m_, 0);
    if (limits_.prune) build_tables();
  }

  void run() {
    if (!limits_.prune) {
      plain(0);
      return;
    }
    std::vector<Bits> domains(n_, Bits(words_, 0));
    for (int s = 0; s < n_; ++s) {
      for (int c = 0; c < m_; ++c) {
        if (unary_ok(s, c)) set_bit(domains[s], c);
      }
    }
    pruned(0, domains);
  }

  std::uint64_t count() const { return count_; }
  const std::optional<OracleResult>& best() const { return best_; }

 private:
  bool unary_ok(int s, int c) const {
    PoLeader leader = make_leader(inst_.sites[s], inst_.candidates[c]);
    const Rational& bx = inst_.boundary.side_x(leader.side);
    for (int o = 0; o < n_; ++o) {
      if (o == s) continue;
      const Site& other = inst_.sites[o];
      if (leader_crosses_site(leader, other, inst_.boundary)) return false;
      if (inst_.v_min) {
        bool spanned = (leader.site_x < other.x && other.x < bx) || (bx < other.x && other.x < leader.site_x);
        if (spanned && abs(other.y - leader.ref_y) < *inst_.v_min) return false;
      }
    }
    return true;
  }

  // Whether site s at candidate c and site t at candidate d can coexist:
  // planarity, ordering pairs and the one-side rule of shared groups.
  bool pair_ok(int s, int c, int t, int d) const {
    if (c == d) return false;
    const Candidate& cs = inst_.candidates[c];
    const Candidate& ct = inst_.candidates[d];
    if (cs.side == ct.side &&
        labels_overlap(cs.y, inst_.sites[s].label_height, ct.y, inst_.sites[t].label_height)) {
      return false;
    }
    if (leaders_conflict(leaders_[s][c], leaders_[t][d], inst_.boundary)) return false;
    if (cs.side == ct.side) {
      if (ordered_[s * n_ + t] && cs.y < ct.y) return false;
      if (ordered_[t * n_ + s] && ct.y < cs.y) return false;
    } else if (share_group_[s * n_ + t]) {
      return false;
    }
    return true;
  }

  void build_tables() {
    leaders_.assign(n_, {});
    for (int s = 0; s < n_; ++s) {
      for (int c = 0; c < m_; ++c) leaders_[s].push_back(make_leader(inst_.sites[s], inst_.candidates[c]));
    }
    ordered_.assign(n_ * n_, 0);
    for (auto [a, b] : cons_.order) {
      if (a != b) ordered_[a * n_ + b] = 1;
    }
    share_group_.assign(n_ * n_, 0);
    for (size_t g = 0; g < cons_.groups.size(); ++g) {
      for (int a : cons_.groups[g]) {
        for (int b : cons_.groups[g]) share_group_[a * n_ + b] = 1;
      }
    }
    compat_.assign(static_cast<size_t>(n_) * m_ * n_, Bits(words_, 0));
    for (int s = 0; s < n_; ++s) {
      for (int c = 0; c < m_; ++c) {
        for (int t = 0; t < n_; ++t) {
          if (t == s) continue;
          Bits& row = compat_[(static_cast<size_t>(s) * m_ + c) * n_ + t];
          for (int d = 0; d < m_; ++d) {
            if (pair_ok(s, c, t, d)) set_bit(row, d);
          }
        }
      }
    }
  }

  // No group is interleaved by an assigned non-member, given that s was
  // just placed and every pairwise condition already holds.
  bool groups_ok(int s) const {
    const Candidate& cs = inst_.candidates[assignment_[s]];
    for (size_t g = 0; g < cons_.groups.size(); ++g) {
      const auto& group = cons_.groups[g];
      const bool member = std::binary_search(group.begin(), group.end(), s);
      std::optional<Side> side;
      Rational lo;
      Rational hi;
      for (int x : group) {
        if (assignment_[x] < 0) continue;
        const Candidate& c = inst_.candidates[assignment_[x]];
        if (!side) {
          side = c.side;
          lo = c.y;
          hi = c.y;
        }
        lo = std::min(lo, c.y);
        hi = std::max(hi, c.y);
      }
      if (!side) continue;
      if (!member) {
        if (cs.side == *side && lo < cs.y && cs.y < hi) return false;
        continue;
      }
      for (int t = 0; t < n_; ++t) {
        if (assignment_[t] < 0 || std::binary_search(group.begin(), group.end(), t)) continue;
        const Candidate& ct = inst_.candidates[assignment_[t]];
        if (ct.side == *side && lo < ct.y && ct.y < hi) return false;
      }
    }
    return true;
  }

  void count_node() {
    if (++nodes_ > limits_.max_assignments) {
      throw LimitExceeded("oracle search exceeded " + std::to_string(limits_.max_assignments) + " nodes");
    }
  }

  // Forward checking: every unassigned site keeps the candidates still
  // compatible with all assigned ones, and the tightest site goes next.
  void pruned(int depth, const std::vector<Bits>& domains) {
    count_node();
    if (done_) return;
    if (depth == n_) {
      leaf();
      return;
    }
    int s = -1;
    int best = m_ + 1;
    for (int t = 0; t < n_; ++t) {
      if (assignment_[t] >= 0) continue;
      const int size = popcount(domains[t]);
      if (size < best) {
        best = size;
        s = t;
      }
    }
    if (best == 0) return;
    std::vector<Bits> next(n_);
    for (int c = 0; c < m_ && !done_; ++c) {
      if (!test_bit(domains[s], c)) continue;
      assignment_[s] = c;
      if (groups_ok(s)) {
        bool alive = true;
        for (int t = 0; t < n_ && alive; ++t) {
          if (assignment_[t] >= 0) continue;
          const Bits& row = compat_[(static_cast<size_t>(s) * m_ + c) * n_ + t];
          next[t].resize(words_);
          std::uint64_t any = 0;
          for (int w = 0; w < words_; ++w) any |= (next[t][w] = domains[t][w] & row[w]);
          alive = any != 0;
        }
        if (alive) pruned(depth + 1, next);
      }
      assignment_[s] = -1;
    }
  }

  void plain(int depth) {
    count_node();
    if (depth == n_) {
      leaf();
      return;
    }
    for (int c = 0; c < m_ && !done_; ++c) {
      if (used_[c]) continue;
      assignment_[depth] = c;
      used_[c] = 1;
      plain(depth + 1);
      used_[c] = 0;
      assignment_[depth] = -1;
    }
  }

  void leaf() {
    Labeling labeling = labeling_from_assignment(inst_, assignment_);
    if (!limits_.prune && !verify(inst_, labeling).admissible()) return;
    ++count_;
    if (limits_.stop_at_first) done_ = true;
    if (counting_) return;
    Rational value = labeling_objective(inst_, labeling);
    if (!best_ || value < best_->value || (value == best_->value && assignment_ < best_->assignment)) {
      best_ = OracleResult{std::move(labeling), value, assignment_};
    }
  }

  const Instance& inst_;
  Constraints cons_;
  OracleLimits limits_;
  bool counting_;
  int n_;
  int m_;
  int words_ = 0;
  std::vector<std::vector<PoLeader>> leaders_;
  std::vector<char> ordered_;
  std::vector<char> share_group_;
  std::vector<Bits> compat_;  // indexed by (site, candidate, other site)
  std::vector<int> assignment_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  bool done_ = false;
  std::optional<OracleResult> best_;
};

}  // namespace

std::optional<OracleResult> oracle_solve(const Instance& instance, const OracleLimits& limits) {
  Search search(instance, limits, false);
  search.run();
  return search.best();
}

std::uint64_t count_admissible(const Instance& instance, const OracleLimits& limits) {
  Search search(instance, limits, true);
  search.run();
  return search.count();
}

}  // namespace leaderline
