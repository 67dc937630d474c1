#include "leaderline/pqtree.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "leaderline/errors.hpp"

namespace leaderline {
namespace {

enum class Status { Empty, Full, Partial };

// Mutable arena used while reducing. Nodes that drop out of the tree stay in
// the arena unreferenced.
class Reducer {
 public:
  explicit Reducer(int n) : leaf_of_(n) {
    for (int s = 0; s < n; ++s) leaf_of_[s] = add(PQNode{PQNode::Kind::Leaf, s, {}, -1});
    if (n == 1) {
      root_ = leaf_of_[0];
    } else if (n > 1) {
      root_ = add(PQNode{PQNode::Kind::P, -1, {}, -1});
      set_children(root_, leaf_of_);
    }
  }

  bool reduce(const std::vector<int>& group) {
    if (group.size() <= 1) return true;
    full_leaf_.assign(nodes_.size(), 0);
    for (int s : group) full_leaf_[leaf_of_[s]] = 1;
    full_.assign(nodes_.size(), 0);
    leaves_.assign(nodes_.size(), 0);
    count(root_);
    const int size = static_cast<int>(group.size());
    int v = root_;
    for (bool descended = true; descended;) {
      descended = false;
      for (int c : nodes_[v].children) {
        if (full_[c] == size) {
          v = c;
          descended = true;
          break;
        }
      }
    }
    if (status(v) == Status::Full) return true;
    return process(v, true);
  }

  PQTree finish(int n) const { return PQTree::from_nodes(nodes_, root_, n); }

 private:
  int add(PQNode node) {
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  void set_children(int v, std::vector<int> kids) {
    if (kids.size() == 1) {
      PQNode moved = nodes_[kids[0]];
      moved.parent = nodes_[v].parent;
      nodes_[v] = moved;
      if (moved.kind == PQNode::Kind::Leaf) leaf_of_[moved.site] = v;
      for (int c : nodes_[v].children) nodes_[c].parent = v;
      return;
    }
    for (int c : kids) nodes_[c].parent = v;
    nodes_[v].children = std::move(kids);
  }

  int wrap(const std::vector<int>& kids) {
    if (kids.size() == 1) return kids[0];
    int id = add(PQNode{PQNode::Kind::P, -1, {}, -1});
    full_.push_back(0);
    leaves_.push_back(0);
    set_children(id, kids);
    return id;
  }

  void count(int v) {
    const PQNode& node = nodes_[v];
    if (node.kind == PQNode::Kind::Leaf) {
      leaves_[v] = 1;
      full_[v] = full_leaf_[v];
      return;
    }
    int f = 0;
    int l = 0;
    for (int c : node.children) {
      count(c);
      f += full_[c];
      l += leaves_[c];
    }
    full_[v] = f;
    leaves_[v] = l;
  }

  Status status(int v) const {
    if (full_[v] == 0) return Status::Empty;
    if (full_[v] == leaves_[v]) return Status::Full;
    return Status::Partial;
  }

  // Children of a processed partial node read empty..full left to right.
  const std::vector<int>& spliced(int v) const { return nodes_[v].children; }

  static bool reads_empty_partial_full(const std::vector<Status>& st) {
    size_t i = 0;
    while (i < st.size() && st[i] == Status::Empty) ++i;
    if (i < st.size() && st[i] == Status::Partial) ++i;
    while (i < st.size() && st[i] == Status::Full) ++i;
    return i == st.size();
  }

  bool process(int v, bool is_root) {
    std::vector<int> kids = nodes_[v].children;
    for (int c : kids) {
      if (status(c) == Status::Partial && !process(c, false)) return false;
    }
    std::vector<int> empty, full, partial;
    std::vector<Status> st;
    for (int c : kids) {
      st.push_back(status(c));
      if (st.back() == Status::Empty) empty.push_back(c);
      if (st.back() == Status::Full) full.push_back(c);
      if (st.back() == Status::Partial) partial.push_back(c);
    }

    if (nodes_[v].kind == PQNode::Kind::P) {
      if (!is_root) {
        if (partial.size() > 1) return false;
        std::vector<int> seq;
        if (!empty.empty()) seq.push_back(wrap(empty));
        if (!partial.empty()) {
          const auto& inner = spliced(partial[0]);
          seq.insert(seq.end(), inner.begin(), inner.end());
        }
        if (!full.empty()) seq.push_back(wrap(full));
        nodes_[v].kind = PQNode::Kind::Q;
        set_children(v, std::move(seq));
        return true;
      }
      if (partial.size() > 2) return false;
      std::vector<int> seq = empty;
      if (partial.empty()) {
        seq.push_back(wrap(full));
      } else if (partial.size() == 1) {
        int q = partial[0];
        std::vector<int> inner = spliced(q);
        if (!full.empty()) inner.push_back(wrap(full));
        set_children(q, std::move(inner));
        seq.push_back(q);
      } else {
        std::vector<int> inner = spliced(partial[0]);
        if (!full.empty()) inner.push_back(wrap(full));
        const auto& tail = spliced(partial[1]);
        inner.insert(inner.end(), tail.rbegin(), tail.rend());
        int q = add(PQNode{PQNode::Kind::Q, -1, {}, -1});
        full_.push_back(0);
        leaves_.push_back(0);
        set_children(q, std::move(inner));
        seq.push_back(q);
      }
      set_children(v, std::move(seq));
      return true;
    }

    if (!is_root) {
      if (!reads_empty_partial_full(st)) {
        std::reverse(kids.begin(), kids.end());
        std::reverse(st.begin(), st.end());
        if (!reads_empty_partial_full(st)) return false;
      }
      std::vector<int> seq;
      for (size_t i = 0; i < kids.size(); ++i) {
        if (st[i] == Status::Partial) {
          const auto& inner = spliced(kids[i]);
          seq.insert(seq.end(), inner.begin(), inner.end());
        } else {
          seq.push_back(kids[i]);
        }
      }
      set_children(v, std::move(seq));
      return true;
    }

    // Root Q-node: empty* partial? full* partial? empty*.
    size_t a = 0;
    while (a < st.size() && st[a] == Status::Empty) ++a;
    size_t b = st.size();
    while (b > a && st[b - 1] == Status::Empty) --b;
    if (a == b) return true;
    for (size_t i = a + 1; i + 1 < b; ++i) {
      if (st[i] != Status::Full) return false;
    }
    std::vector<int> seq(kids.begin(), kids.begin() + a);
    for (size_t i = a; i < b; ++i) {
      if (st[i] != Status::Partial) {
        seq.push_back(kids[i]);
        continue;
      }
      const auto& inner = spliced(kids[i]);
      if (i == a) {
        seq.insert(seq.end(), inner.begin(), inner.end());
      } else {
        seq.insert(seq.end(), inner.rbegin(), inner.rend());
      }
    }
    seq.insert(seq.end(), kids.begin() + b, kids.end());
    set_children(v, std::move(seq));
    return true;
  }

  std::vector<PQNode> nodes_;
  std::vector<int> leaf_of_;
  int root_ = -1;
  std::vector<char> full_leaf_;
  std::vector<int> full_;
  std::vector<int> leaves_;
};

}  // namespace

std::optional<PQTree> PQTree::build(int n, const std::vector<std::vector<int>>& groups) {
  Reducer reducer(n);
  for (const auto& raw : groups) {
    std::vector<int> group = raw;
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    for (int s : group) {
      if (s < 0 || s >= n) throw MalformedInput("group refers to unknown site " + std::to_string(s));
    }
    if (!reducer.reduce(group)) return std::nullopt;
  }
  return reducer.finish(n);
}

PQTree PQTree::from_nodes(const std::vector<PQNode>& nodes, int root, int n) {
  PQTree tree;
  tree.leaf_of_.assign(n, -1);
  if (root < 0) return tree;
  std::function<int(int, int)> emit = [&](int v, int parent) {
    while (nodes[v].kind == PQNode::Kind::P && nodes[v].children.size() == 1) v = nodes[v].children[0];
    const PQNode& src = nodes[v];
    int id = static_cast<int>(tree.nodes_.size());
    PQNode out{src.kind, src.site, {}, parent};
    if (out.kind == PQNode::Kind::Q && src.children.size() == 2) out.kind = PQNode::Kind::P;
    tree.nodes_.push_back(out);
    if (src.kind == PQNode::Kind::Leaf) tree.leaf_of_[src.site] = id;
    std::vector<int> kids;
    for (int c : src.children) kids.push_back(emit(c, id));
    tree.nodes_[id].children = std::move(kids);
    return id;
  };
  emit(root, -1);
  return tree;
}

std::vector<int> PQTree::frontier() const {
  std::vector<int> out;
  for (const auto& node : nodes_) {
    if (node.kind == PQNode::Kind::Leaf) out.push_back(node.site);
  }
  return out;
}

std::string PQTree::dump() const {
  std::ostringstream os;
  std::function<void(int, int)> walk = [&](int v, int depth) {
    os << std::string(2 * depth, ' ');
    const PQNode& node = nodes_[v];
    switch (node.kind) {
      case PQNode::Kind::Leaf: os << "leaf " << node.site << '\n'; return;
      case PQNode::Kind::P: os << "P\n"; break;
      case PQNode::Kind::Q: os << "Q\n"; break;
    }
    for (int c : node.children) walk(c, depth + 1);
  };
  if (!nodes_.empty()) walk(0, 0);
  return os.str();
}

std::vector<std::vector<int>> canonical_groups(const PQTree& tree) {
  std::vector<std::vector<int>> groups(tree.node_count());
  for (int v = tree.node_count() - 1; v >= 0; --v) {
    const PQNode& node = tree.node(v);
    if (node.kind == PQNode::Kind::Leaf) {
      groups[v] = {node.site};
      continue;
    }
    for (int c : node.children) groups[v].insert(groups[v].end(), groups[c].begin(), groups[c].end());
    std::sort(groups[v].begin(), groups[v].end());
  }
  return groups;
}

std::optional<PQTree> reorder_feasible(const PQTree& tree, const std::vector<std::pair<int, int>>& arcs) {
  const int count = tree.node_count();
  std::vector<int> depth(count, 0);
  for (int v = 1; v < count; ++v) depth[v] = depth[tree.node(v).parent] + 1;
  std::vector<int> min_site(count, 0);
  auto groups = canonical_groups(tree);
  for (int v = 0; v < count; ++v) min_site[v] = groups[v].front();

  // Child-level precedence pairs per node.
  std::vector<std::vector<std::pair<int, int>>> before(count);
  for (auto [u, w] : arcs) {
    if (u < 0 || w < 0 || u >= tree.site_count() || w >= tree.site_count()) {
      throw MalformedInput("order pair refers to unknown site");
    }
    if (u == w) continue;
    int a = tree.leaf(u);
    int b = tree.leaf(w);
    int pa = -1;
    int pb = -1;
    while (depth[a] > depth[b]) pa = a, a = tree.node(a).parent;
    while (depth[b] > depth[a]) pb = b, b = tree.node(b).parent;
    while (a != b) {
      pa = a, a = tree.node(a).parent;
      pb = b, b = tree.node(b).parent;
    }
    before[a].emplace_back(pa, pb);
  }

  std::vector<PQNode> nodes;
  for (int v = 0; v < count; ++v) nodes.push_back(tree.node(v));
  for (int v = 0; v < count; ++v) {
    PQNode& node = nodes[v];
    if (node.kind == PQNode::Kind::Leaf || before[v].empty()) {
      if (node.kind == PQNode::Kind::P) {
        std::stable_sort(node.children.begin(), node.children.end(),
                         [&](int x, int y) { return min_site[x] < min_site[y]; });
      }
      continue;
    }
    if (node.kind == PQNode::Kind::Q) {
      auto holds = [&](const std::vector<int>& order) {
        std::vector<int> pos(count, -1);
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        for (auto [x, y] : before[v]) {
          if (pos[x] > pos[y]) return false;
        }
        return true;
      };
      if (holds(node.children)) continue;
      std::reverse(node.children.begin(), node.children.end());
      if (!holds(node.children)) return std::nullopt;
      continue;
    }
    const auto& kids = node.children;
    std::vector<int> indegree(count, 0);
    std::vector<std::vector<int>> succ(count);
    for (auto [x, y] : before[v]) {
      succ[x].push_back(y);
      ++indegree[y];
    }
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (int c : kids) {
      if (indegree[c] == 0) ready.emplace(min_site[c], c);
    }
    std::vector<int> order;
    while (!ready.empty()) {
      int c = ready.top().second;
      ready.pop();
      order.push_back(c);
      for (int d : succ[c]) {
        if (--indegree[d] == 0) ready.emplace(min_site[d], d);
      }
    }
    if (order.size() != kids.size()) return std::nullopt;
    node.children = std::move(order);
  }
  return PQTree::from_nodes(nodes, 0, tree.site_count());
}

PQAGraph::PQAGraph(PQTree tree, std::vector<std::pair<int, int>> arcs)
    : tree_(std::move(tree)), arcs_(std::move(arcs)) {
  const int n = tree_.site_count();
  const int count = tree_.node_count();
  for (auto [u, w] : arcs_) {
    if (u < 0 || w < 0 || u >= n || w >= n) throw MalformedInput("order pair refers to unknown site");
  }
  depth_.assign(count, 0);
  for (int v = 1; v < count; ++v) depth_[v] = depth_[tree_.node(v).parent] + 1;
  groups_ = canonical_groups(tree_);
  subtree_end_.assign(count, 0);
  for (int v = count - 1; v >= 0; --v) {
    const auto& kids = tree_.node(v).children;
    subtree_end_[v] = kids.empty() ? v + 1 : subtree_end_[kids.back()];
  }
  lca_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int x = tree_.leaf(a);
      int y = tree_.leaf(b);
      while (depth_[x] > depth_[y]) x = tree_.node(x).parent;
      while (depth_[y] > depth_[x]) y = tree_.node(y).parent;
      while (x != y) {
        x = tree_.node(x).parent;
        y = tree_.node(y).parent;
      }
      lca_[a * n + b] = x;
    }
  }
}

bool PQAGraph::in_subtree(int site, int node) const {
  int leaf = tree_.leaf(site);
  return node <= leaf && leaf < subtree_end_[node];
}

}  // namespace leaderline
