#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tangle/crossings.hpp"

namespace tangle {

/// Swap decisions of the proper ancestors of one node, root first.
struct SwapHistory {
  std::vector<std::pair<int, std::uint8_t>> steps;  // (inner node id, bit)
};

/// Crossings newly charged when the pair (v_s, v_t) decides (swp_s, swp_t):
/// table entries (v_s, w) for every decided right node w on the path,
/// including v_t itself, plus entries (v, v_t) for the proper left ancestors
/// v; the joint cell is charged once, on the right-path side. Requires v_s
/// and v_t at equal depth with histories covering exactly their proper
/// ancestors (root first); throws Error otherwise.
std::uint64_t current_level_crossings(const CrossingTables& tables,
                                      const TanglegramInstance& inst, int v_s,
                                      int v_t, const SwapHistory& h_s,
                                      const SwapHistory& h_t, int swp_s,
                                      int swp_t);

struct ApproxResult {
  Layout layout;
  /// Tally accumulated by the recursion; a lower bound on `actual`.
  std::uint64_t counted = 0;
  /// Exact recount of the returned layout; this is the headline number.
  std::uint64_t actual = 0;
};

/// Recursive-split 2-approximation for complete instances, O(n^3): each
/// subtree pair tries the four swap-decision combinations (two at the root,
/// mirror symmetry covers the rest), charges the current level via the
/// tables, and recurses into the induced subtree pairings. Ties break
/// lexicographically, (0,0) < (0,1) < (1,0) < (1,1). Throws Error on
/// non-complete input; use approx_general there.
ApproxResult rec_split(const TanglegramInstance& inst);

/// Heuristic extension to arbitrary binary instances, without a guarantee:
/// on complete input it follows exactly the rec_split decision path; when a
/// subinstance pairs a leaf against a subtree, decisions are fixed greedily
/// along the path towards the leaf's partner, and subtrees without an edge
/// to the leaf keep their input order.
ApproxResult approx_general(const TanglegramInstance& inst);

}  // namespace tangle
