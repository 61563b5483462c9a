#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/exact.hpp"
#include "tangle/fpt.hpp"
#include "tangle/generators.hpp"

using namespace tangle;

namespace {

std::uint64_t pow4(std::uint64_t k) {
  return k >= 32 ? ~std::uint64_t{0} : std::uint64_t{1} << (2 * k);
}

std::string balanced_newick(const std::vector<std::string>& labels, int lo,
                            int hi) {
  if (hi - lo == 1) return labels[lo];
  const int mid = lo + (hi - lo) / 2;
  return "(" + balanced_newick(labels, lo, mid) + "," +
         balanced_newick(labels, mid, hi) + ")";
}

}  // namespace

TEST_CASE("budget threshold sits exactly at the optimum") {
  for (int n : {4, 8}) {
    for (int rep = 0; rep < 15; ++rep) {
      const auto inst = gen_random(n, RandomShape::Complete, 40 * n + rep);
      const std::uint64_t opt = solve_exact(inst).crossings;

      FptStats at_opt;
      const auto found = solve_fpt(inst, opt, &at_opt);
      REQUIRE(found.has_value());
      CHECK(count_crossings(inst, *found) <= opt);
      CHECK(at_opt.branch_nodes <= pow4(opt));

      if (opt > 0) {
        FptStats below;
        CHECK(!solve_fpt(inst, opt - 1, &below).has_value());
        CHECK(below.branch_nodes <= pow4(opt - 1));
      }
    }
  }
}

TEST_CASE("witness recounts to at most k for loose budgets") {
  for (int rep = 0; rep < 8; ++rep) {
    const auto inst = gen_random(8, RandomShape::Complete, 800 + rep);
    const std::uint64_t opt = solve_exact(inst).crossings;
    for (std::uint64_t k : {opt, opt + 1, opt + 5}) {
      const auto found = solve_fpt(inst, k);
      REQUIRE(found.has_value());
      CHECK(count_crossings(inst, *found) <= k);
    }
  }
}

TEST_CASE("smallest feasible budget equals the exact optimum") {
  for (int rep = 0; rep < 10; ++rep) {
    const auto inst = gen_random(8, RandomShape::Complete, 1700 + rep);
    const auto [layout, k] = min_crossings_fpt(inst);
    CHECK(k == solve_exact(inst).crossings);
    CHECK(count_crossings(inst, layout) == k);
  }
}

TEST_CASE("zero budget and planarity") {
  const auto planar = naive::make_instance("((a,b),(c,d));", "((b,a),(d,c));");
  CHECK(is_planar(planar));
  const auto found = solve_fpt(planar, 0);
  REQUIRE(found.has_value());
  CHECK(count_crossings(planar, *found) == 0);

  const auto tangled = naive::make_instance("((a,b),(c,d));", "((a,c),(b,d));");
  CHECK(!is_planar(tangled));
  CHECK(!solve_fpt(tangled, 0).has_value());
  CHECK(solve_fpt(tangled, 1).has_value());
}

TEST_CASE("zero-budget runs never branch") {
  for (int rep = 0; rep < 5; ++rep) {
    const auto inst = gen_random(16, RandomShape::Complete, 50 + rep);
    FptStats stats;
    solve_fpt(inst, 0, &stats);
    CHECK(stats.branch_nodes == 0);  // 4^0 = 1 allows one, the fix needs none
  }
}

TEST_CASE("non-complete instances are rejected") {
  const auto inst = naive::make_instance("((a,b),c);", "(c,(b,a));");
  CHECK_THROWS_AS(solve_fpt(inst, 3), Error);
  CHECK_THROWS_AS(min_crossings_fpt(inst), Error);
  CHECK_THROWS_AS(is_planar(inst), Error);
}

TEST_CASE("search is deterministic") {
  const auto inst = gen_random(8, RandomShape::Complete, 77);
  const std::uint64_t opt = solve_exact(inst).crossings;
  const auto a = solve_fpt(inst, opt);
  const auto b = solve_fpt(inst, opt);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
}

TEST_CASE("moderate instances with small optima stay fast") {
  // Two label transpositions that straddle sibling pairs inside disjoint
  // four-leaf blocks; each block forces exactly one crossing, so k* = 2.
  std::vector<std::string> labels;
  for (int i = 1; i <= 32; ++i) labels.push_back(std::to_string(i));
  auto mixed = labels;
  std::swap(mixed[1], mixed[2]);
  std::swap(mixed[17], mixed[18]);
  const TanglegramInstance inst(
      parse_newick(balanced_newick(labels, 0, 32) + ";"),
      parse_newick(balanced_newick(mixed, 0, 32) + ";"));
  const auto [layout, k] = min_crossings_fpt(inst);
  CHECK(k == 2);
  CHECK(count_crossings(inst, layout) == 2);
  FptStats stats;
  REQUIRE(solve_fpt(inst, k, &stats).has_value());
  CHECK(stats.branch_nodes <= pow4(k));
}
