#pragma once

// Naive reference implementations the tests compare the library against.
// Everything here is deliberately simple and quadratic or worse, and shares
// as little code with the library as possible.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangle/crossings.hpp"
#include "tangle/instance.hpp"
#include "tangle/rng.hpp"
#include "tangle/tree.hpp"

namespace naive {

inline tangle::TanglegramInstance make_instance(const std::string& left,
                                                const std::string& right) {
  return tangle::TanglegramInstance(tangle::parse_newick(left),
                                    tangle::parse_newick(right));
}

/// Lowest common ancestor by marking one root path and walking the other.
inline int naive_lca(const tangle::Tree& tree, int a, int b) {
  std::vector<char> marked(tree.node_count(), 0);
  for (int v = a; v != -1; v = tree.node(v).parent) marked[v] = 1;
  int v = b;
  while (!marked[v]) v = tree.node(v).parent;
  return v;
}

/// Crossing count straight from the definition: one pairwise test per
/// unordered label pair on the drawn positions.
inline std::uint64_t pairwise_crossings(const tangle::TanglegramInstance& inst,
                                        const tangle::Layout& layout) {
  const auto lord = tangle::leaf_order_nodes(inst.left(), layout.left_swaps);
  const auto rord = tangle::leaf_order_nodes(inst.right(), layout.right_swaps);
  std::vector<int> lpos(inst.left().node_count(), -1);
  std::vector<int> rpos(inst.right().node_count(), -1);
  for (std::size_t i = 0; i < lord.size(); ++i) lpos[lord[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < rord.size(); ++i) rpos[rord[i]] = static_cast<int>(i);
  std::uint64_t total = 0;
  const auto& leaves = inst.left().leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const int a = leaves[i];
      const int c = leaves[j];
      const int b = inst.partner_of_left(a);
      const int d = inst.partner_of_left(c);
      if (tangle::edges_cross(lpos[a], lpos[c], rpos[b], rpos[d])) ++total;
    }
  return total;
}

/// Calls fn with every swap assignment; usable only while the combined
/// inner-node count stays small.
template <typename Fn>
void for_all_layouts(const tangle::TanglegramInstance& inst, Fn&& fn) {
  const int ml = inst.left().inner_count();
  const int mr = inst.right().inner_count();
  if (ml + mr > 24) throw std::runtime_error("too many inner nodes to enumerate");
  tangle::Layout lay;
  lay.left_swaps.assign(ml, 0);
  lay.right_swaps.assign(mr, 0);
  const std::uint64_t total = std::uint64_t{1} << (ml + mr);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < ml; ++i) lay.left_swaps[i] = (mask >> i) & 1;
    for (int i = 0; i < mr; ++i) lay.right_swaps[i] = (mask >> (ml + i)) & 1;
    fn(lay);
  }
}

inline std::uint64_t brute_min_crossings(const tangle::TanglegramInstance& inst) {
  std::uint64_t best = ~std::uint64_t{0};
  for_all_layouts(inst, [&](const tangle::Layout& lay) {
    best = std::min(best, pairwise_crossings(inst, lay));
  });
  return best;
}

inline tangle::Layout random_layout(const tangle::TanglegramInstance& inst,
                                    tangle::Rng& rng) {
  tangle::Layout lay = tangle::identity_layout(inst);
  for (auto& b : lay.left_swaps) b = static_cast<std::uint8_t>(rng.next() & 1);
  for (auto& b : lay.right_swaps) b = static_cast<std::uint8_t>(rng.next() & 1);
  return lay;
}

// --- geometric oracle over rendered SVG ---

/// Segment endpoints in tenths of an SVG unit, so the "%.1f"-formatted
/// coordinates are held exactly and all predicates run in integers.
struct Segment {
  std::int64_t x1, y1, x2, y2;
};

inline std::vector<Segment> intertree_segments(const std::string& svg) {
  const auto open = svg.find("<g id=\"intertree\"");
  if (open == std::string::npos)
    throw std::runtime_error("svg has no intertree group");
  const auto close = svg.find("</g>", open);
  if (close == std::string::npos)
    throw std::runtime_error("unterminated intertree group");
  const auto tenth = [](const std::string& s) {
    return std::llround(std::stod(s) * 10.0);
  };
  std::vector<Segment> out;
  std::size_t pos = open;
  for (;;) {
    const auto line = svg.find("<line", pos);
    if (line == std::string::npos || line > close) break;
    const auto attr = [&](const char* name) {
      const std::string key = std::string(name) + "=\"";
      const auto at = svg.find(key, line);
      if (at == std::string::npos || at > close)
        throw std::runtime_error("intertree line lacks " + std::string(name));
      const auto val = at + key.size();
      const auto end = svg.find('"', val);
      return tenth(svg.substr(val, end - val));
    };
    out.push_back({attr("x1"), attr("y1"), attr("x2"), attr("y2")});
    pos = line + 5;
  }
  return out;
}

inline int orientation(std::int64_t ax, std::int64_t ay, std::int64_t bx,
                       std::int64_t by, std::int64_t cx, std::int64_t cy) {
  const std::int64_t cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return cross > 0 ? 1 : cross < 0 ? -1 : 0;
}

/// True iff the two segments cross in a single interior point.
inline bool properly_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.x1, s.y1, s.x2, s.y2, t.x1, t.y1);
  const int o2 = orientation(s.x1, s.y1, s.x2, s.y2, t.x2, t.y2);
  const int o3 = orientation(t.x1, t.y1, t.x2, t.y2, s.x1, s.y1);
  const int o4 = orientation(t.x1, t.y1, t.x2, t.y2, s.x2, s.y2);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

inline std::uint64_t count_segment_intersections(const std::vector<Segment>& segs) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (properly_intersect(segs[i], segs[j])) ++total;
  return total;
}

}  // namespace naive
