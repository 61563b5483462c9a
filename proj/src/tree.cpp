#include "tangle/tree.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

#include "tangle/error.hpp"

namespace tangle {

Tree::Tree(std::vector<TreeNode> raw, int root) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw Error("tree has no nodes");
  if (root < 0 || root >= n) throw Error("root index out of range");

  // Preorder renumbering; also detects shared children and cycles.
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> newid(n, -1);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v < 0 || v >= n) throw Error("child index out of range");
    if (newid[v] != -1) throw Error("node is reachable more than once");
    newid[v] = static_cast<int>(order.size());
    order.push_back(v);
    const auto& ch = raw[v].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  if (static_cast<int>(order.size()) != n)
    throw Error("tree has nodes unreachable from the root");

  nodes_.resize(n);
  for (int v = 0; v < n; ++v) {
    const TreeNode& src = raw[order[v]];
    TreeNode dst;
    dst.label = src.label;
    dst.children.reserve(src.children.size());
    for (int c : src.children) dst.children.push_back(newid[c]);
    nodes_[v] = std::move(dst);
  }

  depth_.assign(n, 0);
  subtree_leaves_.assign(n, 0);
  subtree_nodes_.assign(n, 1);
  inner_ordinal_.assign(n, -1);
  std::unordered_set<std::string_view> seen;
  for (int v = 0; v < n; ++v) {
    TreeNode& nd = nodes_[v];
    for (int c : nd.children) {
      nodes_[c].parent = v;
      depth_[c] = depth_[v] + 1;  // parents precede children in preorder
    }
    if (nd.children.empty()) {
      if (nd.label.empty()) throw Error("leaf with an empty label");
      if (!seen.insert(nd.label).second)
        throw Error("duplicate leaf label \"" + nd.label + "\"");
      leaves_.push_back(v);
      height_ = std::max(height_, depth_[v]);
    } else {
      if (!nd.label.empty()) throw Error("label on an inner node");
      if (nd.children.size() == 1) throw Error("inner node with a single child");
      if (nd.children.size() != 2) binary_ = false;
      inner_ordinal_[v] = static_cast<int>(inner_nodes_.size());
      inner_nodes_.push_back(v);
    }
  }
  for (int v = n - 1; v >= 0; --v) {
    if (nodes_[v].children.empty()) {
      subtree_leaves_[v] = 1;
      continue;
    }
    for (int c : nodes_[v].children) {
      subtree_leaves_[v] += subtree_leaves_[c];
      subtree_nodes_[v] += subtree_nodes_[c];
    }
  }
  complete_ = binary_;
  for (int leaf : leaves_)
    if (depth_[leaf] != height_) complete_ = false;
}

namespace {

struct NewickParser {
  std::string_view text;
  std::size_t pos = 0;
  std::vector<TreeNode> nodes;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  static bool label_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' &&
           c != ')' && c != ',' && c != ';' && c != ':';
  }

  void reject_decorations() {
    skip_ws();
    if (pos < text.size() && text[pos] == ':')
      fail("branch lengths are not supported");
    if (pos < text.size() && label_char(text[pos]))
      fail("labels on inner nodes are not supported");
  }

  int parse_subtree() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      const int id = static_cast<int>(nodes.size());
      nodes.emplace_back();
      std::vector<int> children;
      children.push_back(parse_subtree());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        children.push_back(parse_subtree());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ')') fail("expected ')' or ','");
      ++pos;
      if (children.size() < 2) fail("inner node needs at least two children");
      reject_decorations();
      nodes[id].children = std::move(children);
      return id;
    }
    if (text[pos] == ':') fail("branch lengths are not supported");
    const std::size_t start = pos;
    while (pos < text.size() && label_char(text[pos])) ++pos;
    if (pos == start) fail("expected a leaf label");
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[id].label = std::string(text.substr(start, pos - start));
    skip_ws();
    if (pos < text.size() && text[pos] == ':')
      fail("branch lengths are not supported");
    return id;
  }
};

void serialize_node(const Tree& t, int v, std::string& out) {
  const TreeNode& nd = t.node(v);
  if (nd.children.empty()) {
    out += nd.label;
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < nd.children.size(); ++i) {
    if (i > 0) out += ',';
    serialize_node(t, nd.children[i], out);
  }
  out += ')';
}

}  // namespace

Tree parse_newick(std::string_view text, bool strict_binary) {
  NewickParser p;
  p.text = text;
  const int root = p.parse_subtree();
  p.skip_ws();
  if (p.pos >= text.size() || text[p.pos] != ';') p.fail("expected ';'");
  ++p.pos;
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters after ';'");
  Tree tree(std::move(p.nodes), root);
  if (strict_binary && !tree.is_binary())
    throw Error("tree is not binary");
  return tree;
}

std::string serialize_newick(const Tree& tree) {
  std::string out;
  serialize_node(tree, tree.root(), out);
  out += ';';
  return out;
}

}  // namespace tangle
