#include "tangle/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tangle/error.hpp"

namespace tangle {

namespace {

constexpr std::uint64_t kNoValue = std::numeric_limits<std::uint64_t>::max();

struct Candidate {
  std::uint64_t value = kNoValue;
  std::vector<std::uint8_t> left;
  std::vector<std::uint8_t> right;
};

bool lex_less(const std::vector<std::uint8_t>& l1,
              const std::vector<std::uint8_t>& r1,
              const std::vector<std::uint8_t>& l2,
              const std::vector<std::uint8_t>& r2) {
  if (l1 != l2) return l1 < l2;
  return r1 < r2;
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return lex_less(a.left, a.right, b.left, b.right);
}

void check_cap(const TanglegramInstance& inst, int cap, const char* what) {
  const int total = inst.left().inner_count() + inst.right().inner_count();
  if (total > cap)
    throw Error(std::string(what) + ": total inner-node count " +
                std::to_string(total) + " exceeds the cap of " +
                std::to_string(cap));
}

/// Scans Gray indices [gs, ge) over the right-side bits and returns the best
/// candidate in the range. Row sums of the left side are maintained
/// incrementally; each left bit is settled independently per configuration.
Candidate scan_right_range(const CrossingTables& t, std::uint64_t gs,
                           std::uint64_t ge) {
  const int m_left = t.left_inner();
  const int m_right = t.right_inner();
  std::vector<std::uint8_t> r(m_right);
  const std::uint64_t g0 = gs ^ (gs >> 1);
  for (int w = 0; w < m_right; ++w) r[w] = (g0 >> w) & 1u;

  // cost0[v]: crossings of v's row when v keeps bit 0 under the current r.
  std::vector<std::int64_t> cost0(m_left), row_total(m_left);
  for (int v = 0; v < m_left; ++v) {
    std::int64_t c0 = 0, tot = 0;
    for (int w = 0; w < m_right; ++w) {
      const std::int64_t e = t.equal_at(v, w);
      const std::int64_t c = t.crossed_at(v, w);
      tot += e + c;
      c0 += r[w] ? c : e;
    }
    cost0[v] = c0;
    row_total[v] = tot;
  }

  Candidate best;
  auto consider = [&] {
    std::uint64_t value = 0;
    for (int v = 0; v < m_left; ++v)
      value += static_cast<std::uint64_t>(
          std::min(cost0[v], row_total[v] - cost0[v]));
    if (value > best.value) return;
    std::vector<std::uint8_t> l(m_left);
    for (int v = 0; v < m_left; ++v)
      l[v] = row_total[v] - cost0[v] < cost0[v] ? 1 : 0;  // ties keep 0
    if (value < best.value || lex_less(l, r, best.left, best.right)) {
      best.value = value;
      best.left = std::move(l);
      best.right = r;
    }
  };

  consider();
  for (std::uint64_t g = gs + 1; g < ge; ++g) {
    const int w = std::countr_zero(g);
    r[w] ^= 1u;
    const std::int64_t sign = r[w] ? 1 : -1;
    for (int v = 0; v < m_left; ++v)
      cost0[v] += sign * (static_cast<std::int64_t>(t.crossed_at(v, w)) -
                          static_cast<std::int64_t>(t.equal_at(v, w)));
    consider();
  }
  return best;
}

}  // namespace

ExactResult solve_exact(const TanglegramInstance& inst, int cap) {
  check_cap(inst, cap, "solve_exact");
  const int m_right = inst.right().inner_count();
  if (m_right == 0) return {identity_layout(inst), 0};

  const CrossingTables tables = build_tables(inst);
  const std::uint64_t total = std::uint64_t{1} << m_right;
  int chunks = 1;
#ifdef _OPENMP
  chunks = static_cast<int>(std::min<std::uint64_t>(
      total, static_cast<std::uint64_t>(omp_get_max_threads()) * 4));
#endif
  std::vector<Candidate> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t gs = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
    const std::uint64_t ge =
        gs + total / chunks + (static_cast<std::uint64_t>(c) < total % chunks ? 1 : 0);
    parts[c] = scan_right_range(tables, gs, ge);
  }
  // The comparator is a total order, so the merged result does not depend on
  // how the range was partitioned.
  Candidate best = std::move(parts[0]);
  for (int c = 1; c < chunks; ++c)
    if (better(parts[c], best)) best = std::move(parts[c]);
  return {Layout{std::move(best.left), std::move(best.right)}, best.value};
}

ExactResult solve_exact_full(const TanglegramInstance& inst, int cap) {
  check_cap(inst, cap, "solve_exact_full");
  const int m_left = inst.left().inner_count();
  const int m_right = inst.right().inner_count();
  if (m_left + m_right == 0) return {identity_layout(inst), 0};

  const CrossingTables tables = build_tables(inst);
  // The left root keeps bit 0: mirroring every bit preserves all crossings,
  // so some minimizer (including the lexicographic one) has that form.
  const int free_bits = (m_left > 0 ? m_left - 1 : 0) + m_right;
  Layout lay = identity_layout(inst);
  Candidate best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
    for (int i = 1; i < m_left; ++i) lay.left_swaps[i] = (mask >> (i - 1)) & 1u;
    for (int j = 0; j < m_right; ++j)
      lay.right_swaps[j] = (mask >> (m_left - 1 + j)) & 1u;
    const std::uint64_t value = crossings_from_tables(tables, lay);
    if (value < best.value ||
        (value == best.value &&
         lex_less(lay.left_swaps, lay.right_swaps, best.left, best.right))) {
      best.value = value;
      best.left = lay.left_swaps;
      best.right = lay.right_swaps;
    }
  }
  return {Layout{std::move(best.left), std::move(best.right)}, best.value};
}

namespace {

void compatible_orders(const Tree& t, int v,
                       std::vector<std::vector<int>>& out) {
  if (t.is_leaf(v)) {
    out = {{v}};
    return;
  }
  std::vector<std::vector<int>> first, second;
  compatible_orders(t, t.node(v).children[0], first);
  compatible_orders(t, t.node(v).children[1], second);
  out.clear();
  out.reserve(2 * first.size() * second.size());
  for (const auto& a : first)
    for (const auto& b : second) {
      std::vector<int> fwd = a;
      fwd.insert(fwd.end(), b.begin(), b.end());
      out.push_back(std::move(fwd));
      std::vector<int> rev = b;
      rev.insert(rev.end(), a.begin(), a.end());
      out.push_back(std::move(rev));
    }
}

}  // namespace

std::uint64_t min_crossings_by_order_enumeration(const TanglegramInstance& inst,
                                                 int cap) {
  check_cap(inst, cap, "min_crossings_by_order_enumeration");
  std::vector<std::vector<int>> lefts, rights;
  compatible_orders(inst.left(), inst.left().root(), lefts);
  compatible_orders(inst.right(), inst.right().root(), rights);
  const int n = inst.leaf_count();
  std::uint64_t best = kNoValue;
  std::vector<int> pos(inst.left().node_count(), -1);
  for (const auto& sigma : lefts) {
    for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
    for (const auto& tau : rights) {
      std::uint64_t crossings = 0;
      for (int i = 0; i < n; ++i) {
        const int pi = pos[inst.partner_of_right(tau[i])];
        for (int j = i + 1; j < n; ++j)
          crossings += pi > pos[inst.partner_of_right(tau[j])] ? 1 : 0;
      }
      best = std::min(best, crossings);
    }
  }
  return best;
}

}  // namespace tangle
