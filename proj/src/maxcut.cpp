#include "tangle/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tangle/crossings.hpp"
#include "tangle/error.hpp"
#include "tangle/rng.hpp"

namespace tangle {

namespace {

void check_cut(const CutGraph& graph, const Cut& cut) {
  const int pairs = graph.pairs();
  if (static_cast<int>(cut.side.size()) != graph.vertex_count())
    throw Error("cut assigns " + std::to_string(cut.side.size()) +
                " vertices, expected " + std::to_string(graph.vertex_count()));
  for (const std::uint8_t s : cut.side)
    if (s > 1) throw Error("cut sides must be 0 or 1");
  for (int p = 0; p < pairs; ++p)
    if (cut.side[p] == cut.side[pairs + p])
      throw Error("cut does not separate constrained pair " +
                  std::to_string(p));
}

std::uint64_t pair_bits_weight(const CutGraph& g,
                               const std::vector<std::uint8_t>& bits) {
  std::uint64_t w = 0;
  for (int l = 0; l < g.left_pairs; ++l)
    for (int r = 0; r < g.right_pairs; ++r)
      w += bits[l] != bits[g.left_pairs + r] ? g.plain_at(l, r)
                                             : g.prime_at(l, r);
  return w;
}

/// Weight change from flipping pair p (its plain and primed vertex move
/// together): the cut status of every incident edge toggles.
std::int64_t flip_delta(const CutGraph& g,
                        const std::vector<std::uint8_t>& bits, int p) {
  std::int64_t delta = 0;
  if (p < g.left_pairs) {
    for (int r = 0; r < g.right_pairs; ++r) {
      const bool cut_now = bits[p] != bits[g.left_pairs + r];
      const auto pl = static_cast<std::int64_t>(g.plain_at(p, r));
      const auto pr = static_cast<std::int64_t>(g.prime_at(p, r));
      delta += cut_now ? pr - pl : pl - pr;
    }
  } else {
    const int r = p - g.left_pairs;
    for (int l = 0; l < g.left_pairs; ++l) {
      const bool cut_now = bits[l] != bits[p];
      const auto pl = static_cast<std::int64_t>(g.plain_at(l, r));
      const auto pr = static_cast<std::int64_t>(g.prime_at(l, r));
      delta += cut_now ? pr - pl : pl - pr;
    }
  }
  return delta;
}

struct CutCandidate {
  std::uint64_t weight = 0;
  std::vector<std::uint8_t> bits;
  bool valid = false;
};

bool better_cut(const CutCandidate& a, const CutCandidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.bits < b.bits;
}

/// Scans Gray indices [gs, ge) over the pair bits and returns the heaviest
/// cut in the range (ties to the lexicographically smallest bit string).
CutCandidate scan_cut_range(const CutGraph& g, std::uint64_t gs,
                            std::uint64_t ge) {
  const int pairs = g.pairs();
  std::vector<std::uint8_t> bits(pairs);
  const std::uint64_t g0 = gs ^ (gs >> 1);
  for (int p = 0; p < pairs; ++p) bits[p] = (g0 >> p) & 1u;
  std::uint64_t weight = pair_bits_weight(g, bits);

  CutCandidate best{weight, bits, true};
  for (std::uint64_t gi = gs + 1; gi < ge; ++gi) {
    const int p = std::countr_zero(gi);
    weight = static_cast<std::uint64_t>(static_cast<std::int64_t>(weight) +
                                        flip_delta(g, bits, p));
    bits[p] ^= 1u;
    if (weight > best.weight || (weight == best.weight && bits < best.bits)) {
      best.weight = weight;
      best.bits = bits;
    }
  }
  return best;
}

}  // namespace

CutGraph build_cut_graph(const TanglegramInstance& inst,
                         const Layout& initial) {
  validate_layout(inst, initial);
  const Tree& left = inst.left();
  const Tree& right = inst.right();
  CutGraph g;
  g.left_pairs = left.inner_count();
  g.right_pairs = right.inner_count();
  const auto cells =
      static_cast<std::size_t>(g.left_pairs) * g.right_pairs;
  g.plain.assign(cells, 0);
  g.prime.assign(cells, 0);

  const int n = inst.leaf_count();
  if (n < 2) return g;
  std::vector<int> pos_left(left.node_count(), -1);
  std::vector<int> pos_right(right.node_count(), -1);
  const std::vector<int> order_left =
      leaf_order_nodes(left, initial.left_swaps);
  const std::vector<int> order_right =
      leaf_order_nodes(right, initial.right_swaps);
  for (int i = 0; i < n; ++i) {
    pos_left[order_left[i]] = i;
    pos_right[order_right[i]] = i;
  }

  const LcaIndex lca_left(left);
  const LcaIndex lca_right(right);
  const std::vector<int>& leaves = left.leaves();
  for (int i = 0; i < n; ++i) {
    const int a = leaves[i];
    const int b = inst.partner_of_left(a);
    for (int j = i + 1; j < n; ++j) {
      const int c = leaves[j];
      const int d = inst.partner_of_left(c);
      const int vi = left.inner_ordinal(lca_left.lca(a, c));
      const int wi = right.inner_ordinal(lca_right.lca(b, d));
      const bool crossing =
          edges_cross(pos_left[a], pos_left[c], pos_right[b], pos_right[d]);
      const std::size_t idx =
          static_cast<std::size_t>(vi) * g.right_pairs + wi;
      ++(crossing ? g.plain : g.prime)[idx];
    }
  }
  return g;
}

std::uint64_t total_weight(const CutGraph& graph) {
  std::uint64_t sum = 0;
  for (const std::uint64_t w : graph.plain) sum += w;
  for (const std::uint64_t w : graph.prime) sum += w;
  return sum;
}

std::uint64_t cut_weight(const CutGraph& graph, const Cut& cut) {
  check_cut(graph, cut);
  const int pairs = graph.pairs();
  std::uint64_t w = 0;
  for (int l = 0; l < graph.left_pairs; ++l)
    for (int r = 0; r < graph.right_pairs; ++r) {
      const int rp = graph.left_pairs + r;
      if (cut.side[l] != cut.side[rp]) w += graph.plain_at(l, r);
      if (cut.side[l] != cut.side[pairs + rp]) w += graph.prime_at(l, r);
    }
  return w;
}

Cut cut_from_pair_bits(const CutGraph& graph,
                       const std::vector<std::uint8_t>& bits) {
  const int pairs = graph.pairs();
  if (static_cast<int>(bits.size()) != pairs)
    throw Error("expected one bit per constrained pair");
  Cut cut;
  cut.side.resize(2 * static_cast<std::size_t>(pairs));
  for (int p = 0; p < pairs; ++p) {
    if (bits[p] > 1) throw Error("pair bits must be 0 or 1");
    cut.side[p] = bits[p];
    cut.side[pairs + p] = bits[p] ^ 1u;
  }
  return cut;
}

std::vector<std::uint8_t> cut_pair_bits(const CutGraph& graph,
                                        const Cut& cut) {
  check_cut(graph, cut);
  return {cut.side.begin(), cut.side.begin() + graph.pairs()};
}

Layout decode_cut(const CutGraph& graph, const Cut& cut,
                  const Layout& initial) {
  check_cut(graph, cut);
  if (static_cast<int>(initial.left_swaps.size()) != graph.left_pairs ||
      static_cast<int>(initial.right_swaps.size()) != graph.right_pairs)
    throw Error("initial layout does not match the graph dimensions");
  Layout out = initial;
  for (int l = 0; l < graph.left_pairs; ++l)
    out.left_swaps[l] ^= cut.side[l];
  for (int r = 0; r < graph.right_pairs; ++r)
    out.right_swaps[r] ^= cut.side[graph.left_pairs + r];
  return out;
}

Cut exact_cut(const CutGraph& graph, int cap) {
  const int pairs = graph.pairs();
  if (pairs > cap)
    throw Error("exact_cut: " + std::to_string(pairs) +
                " constrained pairs exceed the cap of " + std::to_string(cap));
  if (pairs == 0) return Cut{};

  const std::uint64_t total = std::uint64_t{1} << pairs;
  int chunks = 1;
#ifdef _OPENMP
  chunks = static_cast<int>(std::min<std::uint64_t>(
      total, static_cast<std::uint64_t>(omp_get_max_threads()) * 4));
#endif
  std::vector<CutCandidate> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t gs =
        total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
    const std::uint64_t ge =
        gs + total / chunks +
        (static_cast<std::uint64_t>(c) < total % chunks ? 1 : 0);
    parts[c] = scan_cut_range(graph, gs, ge);
  }
  CutCandidate best = std::move(parts[0]);
  for (int c = 1; c < chunks; ++c)
    if (better_cut(parts[c], best)) best = std::move(parts[c]);
  return cut_from_pair_bits(graph, best.bits);
}

Cut local_search_cut(const CutGraph& graph, const Cut& seed) {
  check_cut(graph, seed);
  std::vector<std::uint8_t> bits(seed.side.begin(),
                                 seed.side.begin() + graph.pairs());
  for (;;) {
    std::int64_t best_delta = 0;
    int best_p = -1;
    for (int p = 0; p < graph.pairs(); ++p) {
      const std::int64_t delta = flip_delta(graph, bits, p);
      if (delta > best_delta) {  // strict: ties keep the earlier pair
        best_delta = delta;
        best_p = p;
      }
    }
    if (best_p < 0) break;
    bits[best_p] ^= 1u;
  }
  return cut_from_pair_bits(graph, bits);
}

Cut local_search_cut_restarts(const CutGraph& graph, int restarts,
                              std::uint64_t seed) {
  if (restarts < 1) throw Error("restart count must be positive");
  const int pairs = graph.pairs();
  std::vector<CutCandidate> parts(restarts);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < restarts; ++i) {
    std::vector<std::uint8_t> bits(pairs, 0);
    if (i > 0) {
      Rng rng(seed + static_cast<std::uint64_t>(i));
      for (int p = 0; p < pairs; ++p)
        bits[p] = static_cast<std::uint8_t>(rng.next() & 1u);
    }
    const Cut out = local_search_cut(graph, cut_from_pair_bits(graph, bits));
    parts[i].bits = cut_pair_bits(graph, out);
    parts[i].weight = cut_weight(graph, out);
    parts[i].valid = true;
  }
  CutCandidate best = std::move(parts[0]);
  for (int i = 1; i < restarts; ++i)
    if (better_cut(parts[i], best)) best = std::move(parts[i]);
  return cut_from_pair_bits(graph, best.bits);
}

}  // namespace tangle
