#pragma once

#include <cstdint>

#include "tangle/crossings.hpp"

namespace tangle {

inline constexpr int kDefaultExactCap = 26;

struct ExactResult {
  Layout layout;
  std::uint64_t crossings = 0;
};

/// Exact minimum crossing count by exhaustive search. Every right-tree swap
/// assignment is enumerated (Gray order with incremental row sums); for a
/// fixed right side the left inner nodes contribute independently, so each
/// left bit is minimized on its own, which still covers every (left, right)
/// assignment. Deterministic: among all minimizers the lexicographically
/// smallest bit string (left bits then right bits, by inner ordinal) is
/// returned. Throws Error when the total inner-node count exceeds cap.
ExactResult solve_exact(const TanglegramInstance& inst,
                        int cap = kDefaultExactCap);

/// Literal reference search: enumerates every swap assignment outright (the
/// left root bit is pinned to 0, mirror symmetry covers the rest) and
/// re-evaluates each one via crossings_from_tables. Exponential in both
/// sides; intended for small instances and as the correctness anchor.
ExactResult solve_exact_full(const TanglegramInstance& inst,
                             int cap = kDefaultExactCap);

/// Independent oracle sharing nothing with the table machinery: enumerates
/// the compatible leaf orders of both trees directly and counts pairwise
/// position inversions. Returns the minimum crossing count.
std::uint64_t min_crossings_by_order_enumeration(const TanglegramInstance& inst,
                                                 int cap = 20);

}  // namespace tangle
