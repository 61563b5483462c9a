#include "tangle/approx.hpp"

#include <limits>
#include <utility>

#include "tangle/error.hpp"

namespace tangle {

namespace {

struct BitDecision {
  int node;
  std::uint8_t bit;
};

/// Shared recursion for rec_split and approx_general. Histories are kept as
/// (inner ordinal, bit) stacks along the current root paths.
struct SplitEngine {
  const TanglegramInstance& inst;
  const CrossingTables& tables;
  const Tree& left;
  const Tree& right;
  std::vector<std::pair<int, std::uint8_t>> hist_left;   // ordinals
  std::vector<std::pair<int, std::uint8_t>> hist_right;  // ordinals

  SplitEngine(const TanglegramInstance& i, const CrossingTables& t)
      : inst(i), tables(t), left(i.left()), right(i.right()) {}

  std::uint64_t charge_pair(int vi, int wi, int swp_s, int swp_t) const {
    std::uint64_t sum = 0;
    for (const auto& [w2, b2] : hist_right)
      sum += tables.selected(vi, w2, swp_s == b2);
    sum += tables.selected(vi, wi, swp_s == swp_t);
    for (const auto& [v2, b2] : hist_left)
      sum += tables.selected(v2, wi, b2 == swp_t);
    return sum;
  }

  std::uint64_t charge_left_only(int vi, int swp_s) const {
    std::uint64_t sum = 0;
    for (const auto& [w2, b2] : hist_right)
      sum += tables.selected(vi, w2, swp_s == b2);
    return sum;
  }

  std::uint64_t charge_right_only(int wi, int swp_t) const {
    std::uint64_t sum = 0;
    for (const auto& [v2, b2] : hist_left)
      sum += tables.selected(v2, wi, b2 == swp_t);
    return sum;
  }

  /// Fixes decisions along the right path towards the partner of the left
  /// leaf; right subtrees without an edge to it keep their input order.
  std::uint64_t descend_right(int leaf_s, int v_t,
                              std::vector<BitDecision>& out_right) {
    if (right.is_leaf(v_t)) return 0;
    const int partner = inst.partner_of_left(leaf_s);
    if (!right.contains(v_t, partner)) return 0;
    const int wi = right.inner_ordinal(v_t);
    const std::uint64_t c0 = charge_right_only(wi, 0);
    const std::uint64_t c1 = charge_right_only(wi, 1);
    const std::uint8_t bit = c1 < c0 ? 1 : 0;
    out_right.push_back({v_t, bit});
    hist_right.emplace_back(wi, bit);
    const auto& ch = right.node(v_t).children;
    const int next = right.contains(ch[0], partner) ? ch[0] : ch[1];
    const std::uint64_t below = descend_right(leaf_s, next, out_right);
    hist_right.pop_back();
    return std::min(c0, c1) + below;
  }

  std::uint64_t descend_left(int v_s, int leaf_t,
                             std::vector<BitDecision>& out_left) {
    if (left.is_leaf(v_s)) return 0;
    const int partner = inst.partner_of_right(leaf_t);
    if (!left.contains(v_s, partner)) return 0;
    const int vi = left.inner_ordinal(v_s);
    const std::uint64_t c0 = charge_left_only(vi, 0);
    const std::uint64_t c1 = charge_left_only(vi, 1);
    const std::uint8_t bit = c1 < c0 ? 1 : 0;
    out_left.push_back({v_s, bit});
    hist_left.emplace_back(vi, bit);
    const auto& ch = left.node(v_s).children;
    const int next = left.contains(ch[0], partner) ? ch[0] : ch[1];
    const std::uint64_t below = descend_left(next, leaf_t, out_left);
    hist_left.pop_back();
    return std::min(c0, c1) + below;
  }

  std::uint64_t solve(int v_s, int v_t, bool at_root,
                      std::vector<BitDecision>& out_left,
                      std::vector<BitDecision>& out_right) {
    if (left.is_leaf(v_s) && right.is_leaf(v_t)) return 0;
    if (left.is_leaf(v_s)) return descend_right(v_s, v_t, out_right);
    if (right.is_leaf(v_t)) return descend_left(v_s, v_t, out_left);

    const int vi = left.inner_ordinal(v_s);
    const int wi = right.inner_ordinal(v_t);
    const auto& ch_s = left.node(v_s).children;
    const auto& ch_t = right.node(v_t).children;

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    int best_s = 0, best_t = 0;
    std::vector<BitDecision> best_left, best_right;
    // Mirroring every bit preserves the drawing's crossings, so the root
    // pair only explores swp_s = 0.
    const int max_s = at_root ? 0 : 1;
    for (int swp_s = 0; swp_s <= max_s; ++swp_s)
      for (int swp_t = 0; swp_t <= 1; ++swp_t) {
        const std::uint64_t level = charge_pair(vi, wi, swp_s, swp_t);
        std::vector<BitDecision> sub_left, sub_right;
        hist_left.emplace_back(vi, static_cast<std::uint8_t>(swp_s));
        hist_right.emplace_back(wi, static_cast<std::uint8_t>(swp_t));
        // The child drawn on top pairs with the child drawn on top.
        const std::uint64_t top =
            solve(ch_s[swp_s], ch_t[swp_t], false, sub_left, sub_right);
        const std::uint64_t bottom =
            solve(ch_s[1 - swp_s], ch_t[1 - swp_t], false, sub_left, sub_right);
        hist_left.pop_back();
        hist_right.pop_back();
        const std::uint64_t total = level + top + bottom;
        if (total < best) {  // strict: ties keep the lexicographically first
          best = total;
          best_s = swp_s;
          best_t = swp_t;
          best_left = std::move(sub_left);
          best_right = std::move(sub_right);
        }
      }
    out_left.push_back({v_s, static_cast<std::uint8_t>(best_s)});
    out_right.push_back({v_t, static_cast<std::uint8_t>(best_t)});
    out_left.insert(out_left.end(), best_left.begin(), best_left.end());
    out_right.insert(out_right.end(), best_right.begin(), best_right.end());
    return best;
  }
};

ApproxResult run_engine(const TanglegramInstance& inst) {
  const CrossingTables tables = build_tables(inst);
  SplitEngine engine(inst, tables);
  std::vector<BitDecision> dec_left, dec_right;
  const std::uint64_t counted = engine.solve(
      inst.left().root(), inst.right().root(), true, dec_left, dec_right);
  Layout layout = identity_layout(inst);
  for (const auto& d : dec_left)
    layout.left_swaps[inst.left().inner_ordinal(d.node)] = d.bit;
  for (const auto& d : dec_right)
    layout.right_swaps[inst.right().inner_ordinal(d.node)] = d.bit;
  const std::uint64_t actual = count_crossings(inst, layout);
  return {std::move(layout), counted, actual};
}

void check_history(const Tree& tree, int v, const SwapHistory& h) {
  if (tree.is_leaf(v)) throw Error("decision node must be an inner node");
  if (static_cast<int>(h.steps.size()) != tree.depth(v))
    throw Error("history length does not match the node depth");
  int expect = v;
  for (auto it = h.steps.rbegin(); it != h.steps.rend(); ++it) {
    expect = tree.node(expect).parent;
    if (it->first != expect)
      throw Error("history does not follow the ancestor path");
    if (it->second > 1) throw Error("history bits must be 0 or 1");
  }
}

}  // namespace

std::uint64_t current_level_crossings(const CrossingTables& tables,
                                      const TanglegramInstance& inst, int v_s,
                                      int v_t, const SwapHistory& h_s,
                                      const SwapHistory& h_t, int swp_s,
                                      int swp_t) {
  check_history(inst.left(), v_s, h_s);
  check_history(inst.right(), v_t, h_t);
  if (inst.left().depth(v_s) != inst.right().depth(v_t))
    throw Error("decision nodes must be at equal depth");
  if (swp_s < 0 || swp_s > 1 || swp_t < 0 || swp_t > 1)
    throw Error("decisions must be 0 or 1");
  SplitEngine engine(inst, tables);
  for (const auto& [node, bit] : h_s.steps)
    engine.hist_left.emplace_back(inst.left().inner_ordinal(node), bit);
  for (const auto& [node, bit] : h_t.steps)
    engine.hist_right.emplace_back(inst.right().inner_ordinal(node), bit);
  return engine.charge_pair(inst.left().inner_ordinal(v_s),
                            inst.right().inner_ordinal(v_t), swp_s, swp_t);
}

ApproxResult rec_split(const TanglegramInstance& inst) {
  if (!inst.left().is_complete() || !inst.right().is_complete())
    throw Error("rec_split requires complete trees; use approx_general");
  return run_engine(inst);
}

ApproxResult approx_general(const TanglegramInstance& inst) {
  return run_engine(inst);
}

}  // namespace tangle
