#pragma once

#include <cstdint>
#include <vector>

#include "tangle/instance.hpp"

namespace tangle {

/// Constrained-MaxCut form of crossing minimization. Every inner node u of
/// either tree yields a vertex pair (u, u') that any feasible cut must
/// separate; choosing the side of u is choosing its swap bit. Each label
/// pair contributes weight 1 between its two lca nodes v (left) and w
/// (right): to the plain edge (v, w) when the pair crosses in the reference
/// drawing, and to (v, w') otherwise. An edge is then cut exactly when the
/// pair does not cross in the decoded drawing, so maximizing cut weight
/// minimizes crossings.
///
/// Pair indexing: pairs 0..left_pairs-1 are left inner ordinals, the rest
/// are right inner ordinals shifted by left_pairs. Vertex indexing: pair p
/// owns the plain vertex p and the primed vertex pairs() + p.
struct CutGraph {
  int left_pairs = 0;
  int right_pairs = 0;
  std::vector<std::uint64_t> plain;  // row-major [left ordinal][right ordinal]
  std::vector<std::uint64_t> prime;  // left plain vertex to right primed vertex

  int pairs() const { return left_pairs + right_pairs; }
  int vertex_count() const { return 2 * pairs(); }
  std::uint64_t plain_at(int l, int r) const {
    return plain[static_cast<std::size_t>(l) * right_pairs + r];
  }
  std::uint64_t prime_at(int l, int r) const {
    return prime[static_cast<std::size_t>(l) * right_pairs + r];
  }
};

/// Side assignment of every vertex: side[x] == 1 puts x in the flip set F,
/// side[x] == 0 in its complement N. Feasibility = every (u, u') separated.
struct Cut {
  std::vector<std::uint8_t> side;

  bool operator==(const Cut&) const = default;
};

/// Builds the graph relative to the drawing selected by `initial`.
CutGraph build_cut_graph(const TanglegramInstance& inst,
                         const Layout& initial);

/// Sum of all edge weights; always n(n-1)/2 for a graph built from an
/// instance with n labels.
std::uint64_t total_weight(const CutGraph& graph);

/// Weight of the edges separated by the cut. Throws Error when the side
/// vector has the wrong length or some constrained pair is not separated.
std::uint64_t cut_weight(const CutGraph& graph, const Cut& cut);

/// Feasible cut from one bit per pair (the side of the plain vertex).
Cut cut_from_pair_bits(const CutGraph& graph,
                       const std::vector<std::uint8_t>& bits);

/// Plain-vertex sides of a validated cut, one bit per pair.
std::vector<std::uint8_t> cut_pair_bits(const CutGraph& graph,
                                        const Cut& cut);

/// Starting from `initial`, flips the swap bit of exactly the inner nodes
/// whose plain vertex lies in F. cut_weight(graph, cut) equals
/// n(n-1)/2 - count_crossings on the result.
Layout decode_cut(const CutGraph& graph, const Cut& cut,
                  const Layout& initial);

inline constexpr int kDefaultCutCap = 25;

/// Maximum-weight feasible cut by enumerating one bit per pair; ties break
/// to the lexicographically smallest pair-bit string. Throws Error when
/// pairs() exceeds the cap.
Cut exact_cut(const CutGraph& graph, int cap = kDefaultCutCap);

/// Best-improvement local search over paired flips (moving u and u'
/// together keeps the cut feasible). Stops at a cut no single paired flip
/// improves; on ties the smallest pair index moves first.
Cut local_search_cut(const CutGraph& graph, const Cut& seed);

/// Best cut over `restarts` local searches: restart 0 starts from the all-N
/// cut, later restarts from seeded random pair bits. Deterministic for a
/// fixed seed; ties break to the lexicographically smallest pair-bit
/// string.
Cut local_search_cut_restarts(const CutGraph& graph, int restarts,
                              std::uint64_t seed);

}  // namespace tangle
