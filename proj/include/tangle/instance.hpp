#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangle/tree.hpp"

namespace tangle {

enum class Side { Left, Right };

/// One swap bit per inner node, indexed by inner ordinal (preorder among
/// inner nodes). Bit 1 reverses the stored child order of that node.
struct Layout {
  std::vector<std::uint8_t> left_swaps;
  std::vector<std::uint8_t> right_swaps;

  bool operator==(const Layout&) const = default;
};

/// A pair of rooted binary trees over the same leaf label set; every label
/// induces one inter-tree edge. Construction validates binarity and the
/// label bijection.
class TanglegramInstance {
 public:
  TanglegramInstance(Tree left, Tree right);

  const Tree& left() const { return left_; }
  const Tree& right() const { return right_; }
  const Tree& tree(Side s) const { return s == Side::Left ? left_ : right_; }
  int leaf_count() const { return left_.leaf_count(); }

  /// Right leaf carrying the same label as a given left leaf, and vice versa.
  int partner_of_left(int leaf) const { return left_partner_[leaf]; }
  int partner_of_right(int leaf) const { return right_partner_[leaf]; }

  /// Position of a leaf in the initial (all swap bits zero) order of its tree.
  int initial_left_pos(int leaf) const { return left_pos_[leaf]; }
  int initial_right_pos(int leaf) const { return right_pos_[leaf]; }

 private:
  Tree left_;
  Tree right_;
  std::vector<int> left_partner_;
  std::vector<int> right_partner_;
  std::vector<int> left_pos_;
  std::vector<int> right_pos_;
};

/// All-zero layout sized for the instance.
Layout identity_layout(const TanglegramInstance& inst);

/// Flips every swap bit on both sides; the drawing is reflected vertically.
Layout mirror(const Layout& layout);

/// Throws Error unless the layout's dimensions match the instance.
void validate_layout(const TanglegramInstance& inst, const Layout& layout);

/// Leaves of one tree in drawn top-to-bottom order under the given swap
/// bits. Throws Error on a swap-vector length mismatch.
std::vector<int> leaf_order_nodes(const Tree& tree,
                                  const std::vector<std::uint8_t>& swaps);

/// Labels of one side in drawn order.
std::vector<std::string> leaf_order(const TanglegramInstance& inst,
                                    const Layout& layout, Side side);

}  // namespace tangle
