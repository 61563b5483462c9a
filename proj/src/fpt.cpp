#include "tangle/fpt.hpp"

#include <array>

#include "tangle/error.hpp"

namespace tangle {

namespace {

struct FptSearch {
  const TanglegramInstance& inst;
  const CrossingTables& tables;
  const Tree& left;
  const Tree& right;
  std::vector<std::int8_t> bit_left;   // by inner ordinal; -1 undecided
  std::vector<std::int8_t> bit_right;
  std::vector<int> decided_left;       // ordinals in decision order
  std::vector<int> decided_right;
  int levels;
  FptStats stats;

  FptSearch(const TanglegramInstance& i, const CrossingTables& t)
      : inst(i),
        tables(t),
        left(i.left()),
        right(i.right()),
        bit_left(i.left().inner_count(), -1),
        bit_right(i.right().inner_count(), -1),
        levels(i.left().height()) {}

  std::uint64_t charge(int vi, int wi, int sv, int sw) const {
    std::uint64_t sum = tables.selected(vi, wi, sv == sw);
    for (int w2 : decided_right)
      sum += tables.selected(vi, w2, sv == bit_right[w2]);
    for (int v2 : decided_left)
      sum += tables.selected(v2, wi, bit_left[v2] == sw);
    return sum;
  }

  /// Inner nodes of one level in the current drawn order; every ancestor
  /// bit is already decided because levels are processed top-down.
  std::vector<int> level_nodes(const Tree& tree,
                               const std::vector<std::int8_t>& bits,
                               int depth) const {
    std::vector<int> out;
    std::vector<int> stack{tree.root()};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (tree.depth(v) == depth) {
        out.push_back(v);
        continue;
      }
      const auto& ch = tree.node(v).children;
      const std::int8_t b = bits[tree.inner_ordinal(v)];
      if (b == 1) {
        for (int c : ch) stack.push_back(c);
      } else {
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
      }
    }
    return out;
  }

  void apply(int vi, int wi, int sv, int sw) {
    bit_left[vi] = static_cast<std::int8_t>(sv);
    bit_right[wi] = static_cast<std::int8_t>(sw);
    decided_left.push_back(vi);
    decided_right.push_back(wi);
  }

  void undo(int vi, int wi) {
    bit_left[vi] = -1;
    bit_right[wi] = -1;
    decided_left.pop_back();
    decided_right.pop_back();
  }

  bool solve_level(int depth, std::uint64_t budget) {
    if (depth == levels) return true;
    const std::vector<int> pair_left = level_nodes(left, bit_left, depth);
    const std::vector<int> pair_right = level_nodes(right, bit_right, depth);
    return solve_pair(depth, 0, pair_left, pair_right, budget);
  }

  bool solve_pair(int depth, int index, const std::vector<int>& pair_left,
                  const std::vector<int>& pair_right, std::uint64_t budget) {
    if (index == static_cast<int>(pair_left.size()))
      return solve_level(depth + 1, budget);
    const int vi = left.inner_ordinal(pair_left[index]);
    const int wi = right.inner_ordinal(pair_right[index]);
    const bool at_root = depth == 0;
    static constexpr std::array<std::pair<int, int>, 4> kDecisions = {
        {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    const int count = at_root ? 2 : 4;  // mirror symmetry at the root pair

    std::array<std::uint64_t, 4> charges{};
    for (int d = 0; d < count; ++d)
      charges[d] = charge(vi, wi, kDecisions[d].first, kDecisions[d].second);

    for (int d = 0; d < count; ++d) {
      if (charges[d] != 0) continue;
      // A free decision never hurts any completion; fix it without branching.
      apply(vi, wi, kDecisions[d].first, kDecisions[d].second);
      if (solve_pair(depth, index + 1, pair_left, pair_right, budget))
        return true;
      undo(vi, wi);
      return false;
    }

    bool counted = false;
    for (int d = 0; d < count; ++d) {
      if (charges[d] > budget) continue;  // strict budget: prune before recursing
      if (!counted) {
        // Every candidate here costs >= 1, so counted branch nodes form a
        // <= 4-ary tree of depth <= k: at most (4^k - 1) / 3 of them.
        ++stats.branch_nodes;
        counted = true;
      }
      apply(vi, wi, kDecisions[d].first, kDecisions[d].second);
      if (solve_pair(depth, index + 1, pair_left, pair_right,
                     budget - charges[d]))
        return true;
      undo(vi, wi);
    }
    return false;
  }
};

}  // namespace

std::optional<Layout> solve_fpt(const TanglegramInstance& inst,
                                std::uint64_t k, FptStats* stats) {
  if (!inst.left().is_complete() || !inst.right().is_complete())
    throw Error("solve_fpt requires complete trees");
  const CrossingTables tables = build_tables(inst);
  FptSearch search(inst, tables);
  const bool found = search.solve_level(0, k);
  if (stats) *stats = search.stats;
  if (!found) return std::nullopt;
  Layout layout = identity_layout(inst);
  for (int vi = 0; vi < inst.left().inner_count(); ++vi)
    layout.left_swaps[vi] = static_cast<std::uint8_t>(search.bit_left[vi]);
  for (int wi = 0; wi < inst.right().inner_count(); ++wi)
    layout.right_swaps[wi] = static_cast<std::uint8_t>(search.bit_right[wi]);
  return layout;
}

std::pair<Layout, std::uint64_t> min_crossings_fpt(
    const TanglegramInstance& inst) {
  const std::uint64_t n = inst.leaf_count();
  const std::uint64_t limit = n * (n - 1) / 2;
  for (std::uint64_t k = 0;; ++k) {
    if (auto layout = solve_fpt(inst, k)) {
      // The first feasible budget is the optimum; report the exact recount.
      return {*layout, count_crossings(inst, *layout)};
    }
    if (k >= limit) throw Error("no layout within the trivial upper bound");
  }
}

bool is_planar(const TanglegramInstance& inst) {
  return solve_fpt(inst, 0).has_value();
}

}  // namespace tangle
