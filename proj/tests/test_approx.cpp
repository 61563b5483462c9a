#include <cstdint>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/approx.hpp"
#include "tangle/error.hpp"
#include "tangle/exact.hpp"
#include "tangle/generators.hpp"

using namespace tangle;

TEST_CASE("level charge on the two-leaf instances") {
  // Aligned: the single pair crosses only when exactly one side swaps.
  const auto aligned = naive::make_instance("(a,b);", "(a,b);");
  const CrossingTables ta = build_tables(aligned);
  const SwapHistory none;
  CHECK(current_level_crossings(ta, aligned, 0, 0, none, none, 0, 0) == 0);
  CHECK(current_level_crossings(ta, aligned, 0, 0, none, none, 0, 1) == 1);
  CHECK(current_level_crossings(ta, aligned, 0, 0, none, none, 1, 0) == 1);
  CHECK(current_level_crossings(ta, aligned, 0, 0, none, none, 1, 1) == 0);

  // Crossed: the opposite.
  const auto crossed = naive::make_instance("(a,b);", "(b,a);");
  const CrossingTables tc = build_tables(crossed);
  CHECK(current_level_crossings(tc, crossed, 0, 0, none, none, 0, 0) == 1);
  CHECK(current_level_crossings(tc, crossed, 0, 0, none, none, 0, 1) == 0);
}

TEST_CASE("level charge one level down, hand-computed") {
  // Left ((a,b),(c,d)), right ((a,c),(b,d)); only {b,c} crosses initially.
  const auto inst = naive::make_instance("((a,b),(c,d));", "((a,c),(b,d));");
  const CrossingTables t = build_tables(inst);
  const SwapHistory none;
  CHECK(current_level_crossings(t, inst, 0, 0, none, none, 0, 0) == 1);
  CHECK(current_level_crossings(t, inst, 0, 0, none, none, 0, 1) == 1);

  SwapHistory root_zero;
  root_zero.steps = {{0, 0}};
  const int v_s = inst.left().inner_nodes()[1];
  const int v_t = inst.right().inner_nodes()[1];
  CHECK(current_level_crossings(t, inst, v_s, v_t, root_zero, root_zero, 0, 0) == 0);
  CHECK(current_level_crossings(t, inst, v_s, v_t, root_zero, root_zero, 1, 0) == 1);
  CHECK(current_level_crossings(t, inst, v_s, v_t, root_zero, root_zero, 0, 1) == 1);
}

TEST_CASE("level charge validates its inputs") {
  const auto inst = naive::make_instance("((a,b),(c,d));", "((a,c),(b,d));");
  const CrossingTables t = build_tables(inst);
  const SwapHistory none;
  SwapHistory root_zero;
  root_zero.steps = {{0, 0}};
  const int v1 = inst.left().inner_nodes()[1];

  // Missing history for a depth-1 node.
  CHECK_THROWS_AS(current_level_crossings(t, inst, v1, v1, none, none, 0, 0),
                  Error);
  // History not along the ancestor path.
  SwapHistory wrong;
  wrong.steps = {{v1, 0}};
  CHECK_THROWS_AS(
      current_level_crossings(t, inst, v1, v1, wrong, root_zero, 0, 0), Error);
  // Bit out of range inside the history.
  SwapHistory bad_bit;
  bad_bit.steps = {{0, 2}};
  CHECK_THROWS_AS(
      current_level_crossings(t, inst, v1, v1, bad_bit, root_zero, 0, 0),
      Error);
  // Leaves cannot decide anything.
  const int leaf = inst.left().leaves()[0];
  CHECK_THROWS_AS(
      current_level_crossings(t, inst, leaf, v1, root_zero, root_zero, 0, 0),
      Error);
  // Nodes at different depths cannot form a level pair.
  CHECK_THROWS_AS(
      current_level_crossings(t, inst, v1, 0, root_zero, none, 0, 0), Error);
  // Decisions must be 0 or 1.
  CHECK_THROWS_AS(current_level_crossings(t, inst, 0, 0, none, none, 2, 0),
                  Error);
  CHECK_THROWS_AS(current_level_crossings(t, inst, 0, 0, none, none, 0, -1),
                  Error);
}

TEST_CASE("split approximation: tally bounds, ratio, determinism") {
  for (int n : {4, 8, 16}) {
    for (int rep = 0; rep < 12; ++rep) {
      const auto inst = gen_random(n, RandomShape::Complete, 70 * n + rep);
      const ApproxResult res = rec_split(inst);
      CHECK(count_crossings(inst, res.layout) == res.actual);
      CHECK(res.counted <= res.actual);
      if (n <= 8) {
        const std::uint64_t opt = solve_exact(inst).crossings;
        CHECK(res.actual >= opt);
        CHECK(res.actual <= 2 * opt);
      }
      const ApproxResult again = rec_split(inst);
      CHECK(again.layout == res.layout);
      CHECK(again.counted == res.counted);
    }
  }
}

TEST_CASE("split approximation rejects non-complete trees") {
  const auto inst = naive::make_instance("((a,b),c);", "(c,(b,a));");
  CHECK_THROWS_AS(rec_split(inst), Error);
  CHECK_NOTHROW(approx_general(inst));
}

TEST_CASE("general heuristic follows the split path on complete input") {
  for (int rep = 0; rep < 6; ++rep) {
    const auto inst = gen_random(8, RandomShape::Complete, 220 + rep);
    const ApproxResult split = rec_split(inst);
    const ApproxResult gen = approx_general(inst);
    CHECK(gen.layout == split.layout);
    CHECK(gen.counted == split.counted);
    CHECK(gen.actual == split.actual);
  }
}

TEST_CASE("general heuristic on non-complete instances") {
  for (int rep = 0; rep < 10; ++rep) {
    const auto inst = gen_random(7, RandomShape::RandomBinary, 330 + rep);
    const ApproxResult res = approx_general(inst);
    CHECK(count_crossings(inst, res.layout) == res.actual);
    CHECK(res.counted <= res.actual);
    CHECK(res.actual >= solve_exact(inst).crossings);
  }
}

TEST_CASE("identical caterpillars draw without crossings") {
  const auto inst =
      naive::make_instance("(((a,b),c),d);", "(((a,b),c),d);");
  const ApproxResult res = approx_general(inst);
  CHECK(res.actual == 0);
  CHECK(res.counted == 0);
}

TEST_CASE("worst-case family stays within the guarantee") {
  const auto inst = gen_tight(2);
  const ApproxResult res = rec_split(inst);
  CHECK(res.counted <= res.actual);
  CHECK(res.actual >= 4);  // the family's optimum is m^2
  CHECK(res.actual <= 8);  // twice the optimum
}
