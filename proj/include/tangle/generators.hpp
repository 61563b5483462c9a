#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "tangle/instance.hpp"

namespace tangle {

/// Worst-case family for the split approximation: left leaves 1..4m in
/// order, right leaves ordered 1..m, 3m..2m+1, m+1..2m, 3m+1..4m, both
/// trees complete. The optimum is m^2 while greedy top-down splitting can
/// end at 2m^2 - m. m must be a positive power of two.
TanglegramInstance gen_tight(int m);

/// The m^2-crossing layout for gen_tight(m): mirrors the right subtree
/// spanning drawn positions [m, 2m), turning the descending block
/// 3m..2m+1 into 2m+1..3m.
Layout tight_optimal_layout(int m);

/// Simple undirected graph, vertices 0-indexed. Edge orientation is kept
/// as given because the generated instance depends on it.
struct MinUncutGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Parses a line-per-edge "i j" text (vertices 1-indexed). A line holding
/// a single integer declares that many vertices, which allows isolated
/// ones; the count otherwise defaults to the largest endpoint. Rejects
/// self-loops and repeated unordered pairs.
MinUncutGraph parse_edge_list(std::string_view text);

/// One weighted bundle of parallel inter-tree edges between a left leaf
/// and a right leaf (node ids of the respective trees).
struct MetaEdge {
  int left_leaf;
  int right_leaf;
  std::uint64_t weight;
};

/// Tanglegram whose inter-tree edges carry positive integer multiplicities
/// and may share leaves. Label bijection between the trees is not
/// required; edges are matched by node id.
struct MetaInstance {
  Tree left;
  Tree right;
  std::vector<MetaEdge> edges;
};

/// All-zero layout sized for the meta trees.
Layout meta_identity_layout(const MetaInstance& meta);

/// Encodes a graph-partition problem ("split the vertices to leave few
/// edges uncut") as a weighted tanglegram. Both trees are the same binary
/// caterpillar: backbone inner nodes v_11, v_12, ..., v_n1, v_n2 from the
/// root down, each holding a leaf l_ij, ending in a central leaf a. Edges:
/// (a, a, wa); per vertex i the pair (l_i1, l_i2, wb) and (l_i2, l_i1,
/// wb); per graph edge (i, j) the unit edge (left l_i1, right l_j1, 1).
/// With wa >> wb >> |E|^2, the minimal weighted crossing count is
/// (uncut edges) * wa + lower-order terms.
MetaInstance gen_minuncut(const MinUncutGraph& graph, std::uint64_t wa,
                          std::uint64_t wb);

/// Layout of gen_minuncut's trees that draws, per vertex i in the first
/// part, left l_i1 and right l_i2 above the backbone and their twins
/// below — and vice versa for the second part. Crossings then count
/// uncut edges at weight wa plus lower-order terms.
Layout minuncut_partition_layout(const MinUncutGraph& graph,
                                 const std::vector<std::uint8_t>& in_first);

/// Weighted crossing count of a meta instance: sum of w(e)*w(f) over
/// unordered edge pairs that cross under the drawn leaf orders. Pairs
/// sharing a leaf on either side never count. O(E^2); the unqualified
/// entry point uses OpenMP when available, the serial one is the
/// reference.
std::uint64_t count_meta_crossings(const MetaInstance& meta,
                                   const Layout& layout);
std::uint64_t count_meta_crossings_serial(const MetaInstance& meta,
                                          const Layout& layout);

/// expand_meta output: the unit-edge instance plus the embedding of the
/// meta trees' inner nodes into the expanded trees.
struct Expansion {
  TanglegramInstance instance;
  std::vector<int> left_inner_map;   // meta inner ordinal -> expanded ordinal
  std::vector<int> right_inner_map;
};

/// Replaces every meta leaf by a caterpillar holding one unit leaf per
/// incident weight unit (labels "e<edge>.<unit>"), so no two unit edges
/// share a leaf. Unit leaves are ordered by the opposite endpoint's
/// initial position, so the all-zero drawing of the expansion has exactly
/// the meta instance's weighted crossing count; other layouts can gain at
/// most expansion_slack_bound extra crossings, all between edges that
/// shared a meta leaf. Every meta leaf must touch at least one edge.
Expansion expand_meta(const MetaInstance& meta);

/// Transfers a meta layout onto the expansion: meta bits are copied to
/// the embedded inner nodes, caterpillar bits stay 0.
Layout expand_layout(const Expansion& expansion, const Layout& meta_layout);

/// Sum of w(e)*w(f) over unordered edge pairs sharing a leaf endpoint:
/// the largest gap possible between meta and expanded crossing counts.
std::uint64_t expansion_slack_bound(const MetaInstance& meta);

enum class RandomShape { Complete, RandomBinary };

/// Seed-reproducible instance over labels "1".."n": the right tree's
/// labels are a uniform permutation; RandomBinary draws both tree shapes
/// by recursive random splitting, Complete (n a power of two) uses the
/// balanced shape.
TanglegramInstance gen_random(int n, RandomShape shape, std::uint64_t seed);

}  // namespace tangle
