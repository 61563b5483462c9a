#include "tangle/instance.hpp"

#include <unordered_map>
#include <utility>

#include "tangle/error.hpp"

namespace tangle {

TanglegramInstance::TanglegramInstance(Tree left, Tree right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!left_.is_binary() || !right_.is_binary())
    throw Error("tanglegram trees must be binary");
  if (left_.leaf_count() != right_.leaf_count())
    throw Error("trees have different leaf counts");

  left_pos_.assign(left_.node_count(), -1);
  right_pos_.assign(right_.node_count(), -1);
  left_partner_.assign(left_.node_count(), -1);
  right_partner_.assign(right_.node_count(), -1);

  std::unordered_map<std::string_view, int> right_by_label;
  right_by_label.reserve(right_.leaf_count());
  const auto& rleaves = right_.leaves();
  for (int i = 0; i < static_cast<int>(rleaves.size()); ++i) {
    right_pos_[rleaves[i]] = i;
    right_by_label.emplace(right_.node(rleaves[i]).label, rleaves[i]);
  }
  const auto& lleaves = left_.leaves();
  for (int i = 0; i < static_cast<int>(lleaves.size()); ++i) {
    const int a = lleaves[i];
    left_pos_[a] = i;
    auto it = right_by_label.find(left_.node(a).label);
    if (it == right_by_label.end())
      throw Error("label \"" + left_.node(a).label +
                  "\" is missing from the right tree");
    left_partner_[a] = it->second;
    right_partner_[it->second] = a;
  }
}

Layout identity_layout(const TanglegramInstance& inst) {
  Layout lay;
  lay.left_swaps.assign(inst.left().inner_count(), 0);
  lay.right_swaps.assign(inst.right().inner_count(), 0);
  return lay;
}

Layout mirror(const Layout& layout) {
  Layout out = layout;
  for (auto& b : out.left_swaps) b ^= 1;
  for (auto& b : out.right_swaps) b ^= 1;
  return out;
}

void validate_layout(const TanglegramInstance& inst, const Layout& layout) {
  if (static_cast<int>(layout.left_swaps.size()) != inst.left().inner_count() ||
      static_cast<int>(layout.right_swaps.size()) != inst.right().inner_count())
    throw Error("layout dimensions do not match the instance");
}

std::vector<int> leaf_order_nodes(const Tree& tree,
                                  const std::vector<std::uint8_t>& swaps) {
  if (static_cast<int>(swaps.size()) != tree.inner_count())
    throw Error("swap vector length does not match the tree");
  std::vector<int> out;
  out.reserve(tree.leaf_count());
  std::vector<int> stack{tree.root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) {
      out.push_back(v);
      continue;
    }
    const auto& ch = tree.node(v).children;
    if (swaps[tree.inner_ordinal(v)]) {
      for (int c : ch) stack.push_back(c);
    } else {
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

std::vector<std::string> leaf_order(const TanglegramInstance& inst,
                                    const Layout& layout, Side side) {
  validate_layout(inst, layout);
  const Tree& tree = inst.tree(side);
  const auto& swaps =
      side == Side::Left ? layout.left_swaps : layout.right_swaps;
  std::vector<std::string> labels;
  labels.reserve(tree.leaf_count());
  for (int v : leaf_order_nodes(tree, swaps)) labels.push_back(tree.node(v).label);
  return labels;
}

}  // namespace tangle
