#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leaderline {

struct PQNode {
  enum class Kind { Leaf, P, Q };
  Kind kind = Kind::Leaf;
  int site = -1;  // leaves only
  std::vector<int> children;
  int parent = -1;
};

// Immutable PQ-tree over sites 0..n-1. Node ids are assigned in preorder,
// so the root is node 0 whenever n > 0.
class PQTree {
 public:
  // The tree whose frontiers are exactly the permutations of 0..n-1 that keep
  // every group consecutive, or nullopt if there is none.
  static std::optional<PQTree> build(int n, const std::vector<std::vector<int>>& groups);

  int site_count() const { return static_cast<int>(leaf_of_.size()); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return nodes_.empty() ? -1 : 0; }
  const PQNode& node(int id) const { return nodes_[id]; }
  int leaf(int site) const { return leaf_of_[site]; }

  std::vector<int> frontier() const;
  std::string dump() const;

  // Builds from a raw node list rooted at `root`; collapses unary P-nodes and
  // binary Q-nodes and renumbers in preorder.
  static PQTree from_nodes(const std::vector<PQNode>& nodes, int root, int n);

 private:
  std::vector<PQNode> nodes_;
  std::vector<int> leaf_of_;
};

// Site set of every node's subtree, sorted.
std::vector<std::vector<int>> canonical_groups(const PQTree& tree);

// Orients every node so the frontier, read top to bottom, extends the arcs
// (u, v) meaning u before v. P-node children are topologically sorted with
// ties broken by the smallest site below them; Q-nodes keep their order if
// possible, else are reversed. nullopt if some node admits no order.
std::optional<PQTree> reorder_feasible(const PQTree& tree, const std::vector<std::pair<int, int>>& arcs);

class PQAGraph {
 public:
  // Throws MalformedInput for arcs naming unknown sites.
  PQAGraph(PQTree tree, std::vector<std::pair<int, int>> arcs);

  const PQTree& tree() const { return tree_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int site_count() const { return tree_.site_count(); }

  // Lowest common ancestor of the leaves of two sites.
  int lca(int site_a, int site_b) const { return lca_[site_a * site_count() + site_b]; }
  int depth(int node) const { return depth_[node]; }
  const std::vector<int>& group(int node) const { return groups_[node]; }
  bool in_subtree(int site, int node) const;

 private:
  PQTree tree_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> depth_;
  std::vector<int> lca_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> subtree_end_;  // one past the last preorder id inside the subtree
};

}  // namespace leaderline
