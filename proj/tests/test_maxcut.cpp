#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/exact.hpp"
#include "tangle/generators.hpp"
#include "tangle/maxcut.hpp"

using namespace tangle;

namespace {

std::vector<std::uint8_t> random_bits(int count, Rng& rng) {
  std::vector<std::uint8_t> bits(count);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() & 1);
  return bits;
}

}  // namespace

TEST_CASE("two-leaf graphs, pinned") {
  const auto aligned = naive::make_instance("(a,b);", "(a,b);");
  const CutGraph ga = build_cut_graph(aligned, identity_layout(aligned));
  CHECK(ga.left_pairs == 1);
  CHECK(ga.right_pairs == 1);
  CHECK(ga.pairs() == 2);
  CHECK(ga.vertex_count() == 4);
  CHECK(ga.plain_at(0, 0) == 0);  // the pair does not cross initially
  CHECK(ga.prime_at(0, 0) == 1);
  CHECK(total_weight(ga) == 1);

  const auto crossed = naive::make_instance("(a,b);", "(b,a);");
  const CutGraph gc = build_cut_graph(crossed, identity_layout(crossed));
  CHECK(gc.plain_at(0, 0) == 1);
  CHECK(gc.prime_at(0, 0) == 0);
}

TEST_CASE("cut feasibility is enforced") {
  const auto inst = naive::make_instance("((a,b),c);", "(c,(a,b));");
  const CutGraph g = build_cut_graph(inst, identity_layout(inst));
  Cut bad;
  bad.side.assign(g.vertex_count(), 0);  // no pair separated
  CHECK_THROWS_AS(cut_weight(g, bad), Error);
  CHECK_THROWS_AS(cut_pair_bits(g, bad), Error);
  bad.side.assign(g.vertex_count() + 1, 0);
  CHECK_THROWS_AS(cut_weight(g, bad), Error);
}

TEST_CASE("pair bits and sides round-trip") {
  const auto inst = gen_random(8, RandomShape::RandomBinary, 21);
  const CutGraph g = build_cut_graph(inst, identity_layout(inst));
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const auto bits = random_bits(g.pairs(), rng);
    const Cut cut = cut_from_pair_bits(g, bits);
    REQUIRE(static_cast<int>(cut.side.size()) == g.vertex_count());
    for (int p = 0; p < g.pairs(); ++p) {
      CHECK(cut.side[p] == bits[p]);
      CHECK(cut.side[g.pairs() + p] == (1 ^ bits[p]));  // separated
    }
    CHECK(cut_pair_bits(g, cut) == bits);
  }
}

TEST_CASE("cut weight complements the crossing count") {
  Rng rng(606);
  for (int n : {2, 5, 9, 23, 64}) {
    const auto inst = gen_random(n, RandomShape::RandomBinary, 3000 + n);
    const std::uint64_t all_pairs =
        static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (int rep = 0; rep < 5; ++rep) {
      const Layout initial = naive::random_layout(inst, rng);
      const CutGraph g = build_cut_graph(inst, initial);
      CHECK(total_weight(g) == all_pairs);
      const Cut cut = cut_from_pair_bits(g, random_bits(g.pairs(), rng));
      const Layout decoded = decode_cut(g, cut, initial);
      CHECK(cut_weight(g, cut) + count_crossings(inst, decoded) == all_pairs);
    }
  }
}

TEST_CASE("every feasible cut of a small graph complements its decode") {
  const auto inst = naive::make_instance("((a,b),(c,d));", "((a,c),(b,d));");
  const Layout initial = identity_layout(inst);
  const CutGraph g = build_cut_graph(inst, initial);
  const std::uint64_t all_pairs = 6;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.pairs()); ++mask) {
    std::vector<std::uint8_t> bits(g.pairs());
    for (int p = 0; p < g.pairs(); ++p) bits[p] = (mask >> p) & 1;
    const Cut cut = cut_from_pair_bits(g, bits);
    CHECK(cut_weight(g, cut) +
              count_crossings(inst, decode_cut(g, cut, initial)) ==
          all_pairs);
  }
}

TEST_CASE("complementing every side preserves the weight") {
  const auto inst = gen_random(9, RandomShape::RandomBinary, 47);
  const CutGraph g = build_cut_graph(inst, identity_layout(inst));
  Rng rng(8);
  for (int rep = 0; rep < 6; ++rep) {
    auto bits = random_bits(g.pairs(), rng);
    const std::uint64_t w = cut_weight(g, cut_from_pair_bits(g, bits));
    for (auto& b : bits) b ^= 1;
    CHECK(cut_weight(g, cut_from_pair_bits(g, bits)) == w);
  }
}

TEST_CASE("all-zero bits decode to the reference, all-one to its mirror") {
  Rng rng(11);
  const auto inst = gen_random(7, RandomShape::RandomBinary, 99);
  const Layout initial = naive::random_layout(inst, rng);
  const CutGraph g = build_cut_graph(inst, initial);
  const Cut zero = cut_from_pair_bits(g, std::vector<std::uint8_t>(g.pairs(), 0));
  CHECK(decode_cut(g, zero, initial) == initial);
  const Cut one = cut_from_pair_bits(g, std::vector<std::uint8_t>(g.pairs(), 1));
  CHECK(decode_cut(g, one, initial) == mirror(initial));
}

TEST_CASE("maximum cut recovers the exact minimum") {
  Rng rng(2024);
  for (int n : {3, 5, 8}) {
    for (int rep = 0; rep < 6; ++rep) {
      const auto inst = gen_random(n, RandomShape::RandomBinary, 50 * n + rep);
      const std::uint64_t opt = solve_exact(inst).crossings;
      const std::uint64_t all_pairs =
          static_cast<std::uint64_t>(n) * (n - 1) / 2;
      const Layout initial =
          rep % 2 ? naive::random_layout(inst, rng) : identity_layout(inst);
      const CutGraph g = build_cut_graph(inst, initial);
      const Cut best = exact_cut(g);
      CHECK(cut_weight(g, best) == all_pairs - opt);
      CHECK(count_crossings(inst, decode_cut(g, best, initial)) == opt);
    }
  }
}

TEST_CASE("the reference drawing does not move the optimum") {
  const auto inst = gen_random(6, RandomShape::RandomBinary, 31);
  Rng rng(14);
  const Layout a = naive::random_layout(inst, rng);
  const CutGraph ga = build_cut_graph(inst, a);
  const CutGraph gm = build_cut_graph(inst, mirror(a));
  // Mirroring preserves every pair's crossing state, edge for edge.
  CHECK(ga.plain == gm.plain);
  CHECK(ga.prime == gm.prime);
  const CutGraph gi = build_cut_graph(inst, identity_layout(inst));
  CHECK(cut_weight(ga, exact_cut(ga)) == cut_weight(gi, exact_cut(gi)));
}

TEST_CASE("exact cut is deterministic and lexicographically smallest") {
  const auto inst = gen_random(5, RandomShape::RandomBinary, 63);
  const CutGraph g = build_cut_graph(inst, identity_layout(inst));
  const Cut best = exact_cut(g);
  CHECK(exact_cut(g) == best);
  const std::uint64_t w = cut_weight(g, best);
  const auto best_bits = cut_pair_bits(g, best);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.pairs()); ++mask) {
    std::vector<std::uint8_t> bits(g.pairs());
    for (int p = 0; p < g.pairs(); ++p) bits[p] = (mask >> p) & 1;
    const std::uint64_t cur = cut_weight(g, cut_from_pair_bits(g, bits));
    CHECK(cur <= w);
    if (cur == w) CHECK(!(bits < best_bits));
  }
}

TEST_CASE("local search ends one flip from nowhere better") {
  Rng rng(321);
  for (int n : {6, 12, 24}) {
    const auto inst = gen_random(n, RandomShape::RandomBinary, 700 + n);
    const CutGraph g = build_cut_graph(inst, identity_layout(inst));
    const Cut out =
        local_search_cut(g, cut_from_pair_bits(g, random_bits(g.pairs(), rng)));
    const std::uint64_t w = cut_weight(g, out);
    auto bits = cut_pair_bits(g, out);
    for (int p = 0; p < g.pairs(); ++p) {
      bits[p] ^= 1;
      CHECK(cut_weight(g, cut_from_pair_bits(g, bits)) <= w);
      bits[p] ^= 1;
    }
  }
}

TEST_CASE("local search leaves an optimum untouched") {
  const auto inst = gen_random(6, RandomShape::RandomBinary, 85);
  const CutGraph g = build_cut_graph(inst, identity_layout(inst));
  const Cut best = exact_cut(g);
  CHECK(local_search_cut(g, best) == best);
}

TEST_CASE("restarted local search") {
  const auto inst = gen_random(10, RandomShape::RandomBinary, 19);
  const CutGraph g = build_cut_graph(inst, identity_layout(inst));
  const Cut a = local_search_cut_restarts(g, 6, 42);
  CHECK(local_search_cut_restarts(g, 6, 42) == a);  // deterministic
  const Cut single = local_search_cut(
      g, cut_from_pair_bits(g, std::vector<std::uint8_t>(g.pairs(), 0)));
  CHECK(cut_weight(g, a) >= cut_weight(g, single));  // restart 0 is included
  CHECK(cut_weight(g, a) <= total_weight(g));
  CHECK_THROWS_AS(local_search_cut_restarts(g, 0, 1), Error);
}

TEST_CASE("enumeration cap") {
  const auto inst = gen_random(8, RandomShape::Complete, 2);
  const CutGraph g = build_cut_graph(inst, identity_layout(inst));
  CHECK(g.pairs() == 14);
  CHECK_THROWS_AS(exact_cut(g, 13), Error);
  CHECK_NOTHROW(exact_cut(g, 14));
}
