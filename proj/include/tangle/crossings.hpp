#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tangle/instance.hpp"

namespace tangle {

/// True iff the inter-tree edges (a-b) and (c-d) cross, given the drawn
/// positions of a, c on the left line and of b, d on the right line.
inline bool edges_cross(int pos_a, int pos_c, int pos_b, int pos_d) {
  return (pos_a < pos_c) != (pos_b < pos_d);
}

/// Inversions of a sequence of distinct values (merge-sort, O(n log n)).
std::uint64_t count_inversions(std::vector<int> values);

/// Crossing count of the drawing selected by the layout: inversions of the
/// map from right-line positions to left-line positions.
std::uint64_t count_crossings(const TanglegramInstance& inst,
                              const Layout& layout);

/// Constant-time lowest common ancestors after linear-ish preprocessing
/// (Euler tour plus sparse-table range minimum).
class LcaIndex {
 public:
  explicit LcaIndex(const Tree& tree);
  int lca(int a, int b) const;

 private:
  std::vector<int> first_;            // node -> first tour index
  std::vector<int> tour_node_;        // tour index -> node
  std::vector<int> tour_depth_;       // tour index -> depth
  std::vector<int> log2_;             // floor(log2(len)) lookup
  std::vector<std::vector<int>> rmq_;  // rmq_[k][i]: argmin over 2^k entries
};

/// Pairwise crossing tables, indexed by inner ordinals. Cell (v, w) counts
/// label pairs whose left lca is v and right lca is w; `equal` holds the
/// crossings realized when v and w make the same swap decision relative to
/// the input child order, `crossed` those realized when they decide
/// differently. The two tables sum to n(n-1)/2.
class CrossingTables {
 public:
  CrossingTables(int left_inner, int right_inner)
      : rows_(left_inner),
        cols_(right_inner),
        equal_(static_cast<std::size_t>(left_inner) * right_inner, 0),
        crossed_(static_cast<std::size_t>(left_inner) * right_inner, 0) {}

  int left_inner() const { return rows_; }
  int right_inner() const { return cols_; }

  std::uint32_t equal_at(int vi, int wi) const { return equal_[idx(vi, wi)]; }
  std::uint32_t crossed_at(int vi, int wi) const { return crossed_[idx(vi, wi)]; }
  /// Entry selected by a decision pair: same decision -> equal, else crossed.
  std::uint32_t selected(int vi, int wi, bool same) const {
    return same ? equal_[idx(vi, wi)] : crossed_[idx(vi, wi)];
  }

  void add_equal(int vi, int wi) { ++equal_[idx(vi, wi)]; }
  void add_crossed(int vi, int wi) { ++crossed_[idx(vi, wi)]; }

  std::uint64_t total() const;

  std::uint32_t* equal_data() { return equal_.data(); }
  std::uint32_t* crossed_data() { return crossed_.data(); }
  std::size_t idx(int vi, int wi) const {
    return static_cast<std::size_t>(vi) * cols_ + wi;
  }

 private:
  int rows_;
  int cols_;
  std::vector<std::uint32_t> equal_;
  std::vector<std::uint32_t> crossed_;
};

/// Leaf cap for the dense tables (default 8192); the TANGLE_MAX_N
/// environment variable overrides it.
int max_table_leaves();

/// Builds both tables in O(n^2) lca queries. The parallel entry point uses
/// OpenMP when available; the serial one is the reference implementation.
CrossingTables build_tables(const TanglegramInstance& inst);
CrossingTables build_tables_serial(const TanglegramInstance& inst);

/// Evaluates a layout against the tables in O(inner_left * inner_right).
std::uint64_t crossings_from_tables(const CrossingTables& tables,
                                    const Layout& layout);

}  // namespace tangle
