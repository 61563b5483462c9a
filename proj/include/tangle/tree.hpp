#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tangle {

/// One node of a rooted tree. The stored child order is the initial
/// (unswapped) top-to-bottom drawing order.
struct TreeNode {
  std::vector<int> children;  // empty iff leaf
  int parent = -1;            // -1 at the root
  std::string label;          // non-empty iff leaf
};

/// Rooted tree with preorder node numbering: the root is node 0 and every
/// subtree occupies a contiguous index range. Inner nodes additionally carry
/// an ordinal (their rank among inner nodes in preorder) which indexes swap
/// vectors and crossing tables.
class Tree {
 public:
  Tree() = default;

  /// Takes raw nodes (children as indices into the raw vector, parents
  /// ignored) and renumbers them in preorder. Throws Error when the node set
  /// is not a tree rooted at `root`, when an inner node has exactly one
  /// child, or when leaf labels are empty, duplicated, or sit on inner nodes.
  Tree(std::vector<TreeNode> nodes, int root);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  const TreeNode& node(int v) const { return nodes_[v]; }
  bool is_leaf(int v) const { return nodes_[v].children.empty(); }

  int leaf_count() const { return static_cast<int>(leaves_.size()); }
  int inner_count() const { return static_cast<int>(inner_nodes_.size()); }

  /// Leaves in preorder; this is the initial top-to-bottom leaf order.
  const std::vector<int>& leaves() const { return leaves_; }
  /// Inner nodes in preorder; the position in this list is the inner ordinal.
  const std::vector<int>& inner_nodes() const { return inner_nodes_; }
  /// Rank of an inner node among inner nodes in preorder; -1 for leaves.
  int inner_ordinal(int v) const { return inner_ordinal_[v]; }

  int depth(int v) const { return depth_[v]; }
  /// Maximum leaf depth.
  int height() const { return height_; }
  int subtree_leaf_count(int v) const { return subtree_leaves_[v]; }
  int subtree_node_count(int v) const { return subtree_nodes_[v]; }
  /// True iff v lies in the subtree rooted at anc (ancestor-or-self).
  bool contains(int anc, int v) const {
    return anc <= v && v < anc + subtree_nodes_[anc];
  }

  bool is_binary() const { return binary_; }
  /// Binary with all leaves at the same depth.
  bool is_complete() const { return complete_; }

 private:
  std::vector<TreeNode> nodes_;
  std::vector<int> depth_;
  std::vector<int> subtree_leaves_;
  std::vector<int> subtree_nodes_;
  std::vector<int> inner_ordinal_;
  std::vector<int> inner_nodes_;
  std::vector<int> leaves_;
  int height_ = 0;
  bool binary_ = true;
  bool complete_ = true;
};

/// Parses a Newick string such as "((a,b),c);". Labels are opaque byte
/// strings (anything except whitespace and "(),;:"); they may appear on
/// leaves only. Multifurcating inner nodes are tolerated unless
/// strict_binary is set. Branch lengths are rejected. Throws ParseError with
/// a byte offset on bad syntax and Error on semantic violations.
Tree parse_newick(std::string_view text, bool strict_binary = false);

/// Inverse of parse_newick; round-trips exactly.
std::string serialize_newick(const Tree& tree);

}  // namespace tangle
