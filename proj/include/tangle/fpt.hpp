#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "tangle/crossings.hpp"

namespace tangle {

struct FptStats {
  /// Search-tree nodes where an actual branch happened (no zero-charge fix).
  std::uint64_t branch_nodes = 0;
};

/// Bounded search for a layout with at most k crossings on a complete
/// instance; returns std::nullopt when none exists. Inner-node pairs are
/// processed level by level; within a level the i-th left subtree in the
/// current drawn order pairs with the i-th right subtree, recomputed from
/// the decisions above. A decision's charge counts its table entries against
/// every already-decided opposite node plus the joint cell, so each cell is
/// charged exactly once over a full assignment. Zero-charge decisions are
/// fixed without branching (lexicographically smallest first); otherwise all
/// four decisions branch (two at the root) under a strict budget. Runs in
/// O(4^k n^2). Throws Error on non-complete input.
std::optional<Layout> solve_fpt(const TanglegramInstance& inst,
                                std::uint64_t k, FptStats* stats = nullptr);

/// Smallest k for which solve_fpt succeeds, with a witness layout.
std::pair<Layout, std::uint64_t> min_crossings_fpt(
    const TanglegramInstance& inst);

/// True iff the instance admits a crossing-free drawing.
bool is_planar(const TanglegramInstance& inst);

}  // namespace tangle
