#include "tangle/crossings.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "tangle/error.hpp"

namespace tangle {

namespace {

std::uint64_t merge_count(std::vector<int>& v, std::vector<int>& tmp,
                          std::size_t lo, std::size_t hi) {
  if (hi - lo <= 1) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      tmp[k++] = v[i++];
    } else {
      inv += mid - i;  // v[i..mid) are all greater than v[j]
      tmp[k++] = v[j++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  for (std::size_t p = lo; p < hi; ++p) v[p] = tmp[p];
  return inv;
}

}  // namespace

std::uint64_t count_inversions(std::vector<int> values) {
  std::vector<int> tmp(values.size());
  return merge_count(values, tmp, 0, values.size());
}

std::uint64_t count_crossings(const TanglegramInstance& inst,
                              const Layout& layout) {
  validate_layout(inst, layout);
  const std::vector<int> lorder =
      leaf_order_nodes(inst.left(), layout.left_swaps);
  const std::vector<int> rorder =
      leaf_order_nodes(inst.right(), layout.right_swaps);
  std::vector<int> pos_left(inst.left().node_count(), -1);
  for (int i = 0; i < static_cast<int>(lorder.size()); ++i)
    pos_left[lorder[i]] = i;
  std::vector<int> seq;
  seq.reserve(rorder.size());
  for (int leaf : rorder) seq.push_back(pos_left[inst.partner_of_right(leaf)]);
  return count_inversions(std::move(seq));
}

LcaIndex::LcaIndex(const Tree& tree) {
  const int n = tree.node_count();
  first_.assign(n, -1);
  tour_node_.reserve(2 * n);
  tour_depth_.reserve(2 * n);

  // Iterative Euler tour: a node is appended on entry and after each child.
  std::vector<std::pair<int, std::size_t>> stack;
  stack.emplace_back(tree.root(), 0);
  while (!stack.empty()) {
    auto& [v, next_child] = stack.back();
    if (next_child == 0) {
      first_[v] = static_cast<int>(tour_node_.size());
      tour_node_.push_back(v);
      tour_depth_.push_back(tree.depth(v));
    }
    const auto& ch = tree.node(v).children;
    if (next_child < ch.size()) {
      const int c = ch[next_child++];
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        tour_node_.push_back(stack.back().first);
        tour_depth_.push_back(tree.depth(stack.back().first));
      }
    }
  }

  const int m = static_cast<int>(tour_node_.size());
  log2_.assign(m + 1, 0);
  for (int i = 2; i <= m; ++i) log2_[i] = log2_[i / 2] + 1;
  const int levels = log2_[m] + 1;
  rmq_.assign(levels, std::vector<int>(m));
  for (int i = 0; i < m; ++i) rmq_[0][i] = i;
  for (int k = 1; k < levels; ++k) {
    const int half = 1 << (k - 1);
    for (int i = 0; i + (1 << k) <= m; ++i) {
      const int a = rmq_[k - 1][i];
      const int b = rmq_[k - 1][i + half];
      rmq_[k][i] = tour_depth_[a] <= tour_depth_[b] ? a : b;
    }
  }
}

int LcaIndex::lca(int a, int b) const {
  int l = first_[a], r = first_[b];
  if (l > r) std::swap(l, r);
  const int k = log2_[r - l + 1];
  const int x = rmq_[k][l];
  const int y = rmq_[k][r - (1 << k) + 1];
  return tour_node_[tour_depth_[x] <= tour_depth_[y] ? x : y];
}

std::uint64_t CrossingTables::total() const {
  std::uint64_t sum = 0;
  for (std::uint32_t x : equal_) sum += x;
  for (std::uint32_t x : crossed_) sum += x;
  return sum;
}

int max_table_leaves() {
  static const int cap = [] {
    if (const char* env = std::getenv("TANGLE_MAX_N")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<int>(v);
    }
    return 8192;
  }();
  return cap;
}

namespace {

CrossingTables build_tables_impl(const TanglegramInstance& inst, bool parallel) {
  const int n = inst.leaf_count();
  if (n > max_table_leaves())
    throw Error("instance exceeds the dense-table leaf cap of " +
                std::to_string(max_table_leaves()) +
                " (override with TANGLE_MAX_N)");
  const Tree& left = inst.left();
  const Tree& right = inst.right();
  const LcaIndex lca_left(left);
  const LcaIndex lca_right(right);
  CrossingTables tables(left.inner_count(), right.inner_count());
  const auto& lleaves = left.leaves();
  std::uint32_t* equal = tables.equal_data();
  std::uint32_t* crossed = tables.crossed_data();

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (int i = 0; i < n; ++i) {
    const int a = lleaves[i];
    const int pb = inst.initial_right_pos(inst.partner_of_left(a));
    for (int j = i + 1; j < n; ++j) {
      const int c = lleaves[j];
      const int pd = inst.initial_right_pos(inst.partner_of_left(c));
      const int vi = left.inner_ordinal(lca_left.lca(a, c));
      const int wi = right.inner_ordinal(
          lca_right.lca(inst.partner_of_left(a), inst.partner_of_left(c)));
      // i < j on the left, so the pair crosses initially iff pb > pd.
      std::uint32_t* cell =
          (pb > pd ? equal : crossed) + tables.idx(vi, wi);
#pragma omp atomic
      ++*cell;
    }
  }
  return tables;
}

}  // namespace

CrossingTables build_tables(const TanglegramInstance& inst) {
  return build_tables_impl(inst, true);
}

CrossingTables build_tables_serial(const TanglegramInstance& inst) {
  return build_tables_impl(inst, false);
}

std::uint64_t crossings_from_tables(const CrossingTables& tables,
                                    const Layout& layout) {
  if (static_cast<int>(layout.left_swaps.size()) != tables.left_inner() ||
      static_cast<int>(layout.right_swaps.size()) != tables.right_inner())
    throw Error("layout dimensions do not match the tables");
  std::uint64_t sum = 0;
  for (int vi = 0; vi < tables.left_inner(); ++vi)
    for (int wi = 0; wi < tables.right_inner(); ++wi)
      sum += tables.selected(vi, wi,
                             layout.left_swaps[vi] == layout.right_swaps[wi]);
  return sum;
}

}  // namespace tangle
