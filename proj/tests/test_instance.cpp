#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tangle/crossings.hpp"
#include "tangle/error.hpp"
#include "tangle/generators.hpp"
#include "tangle/instance.hpp"

using namespace tangle;

TEST_CASE("partner and position maps") {
  const auto inst = naive::make_instance("(a,(b,c));", "((b,a),c);");
  CHECK(inst.leaf_count() == 3);
  for (int leaf : inst.left().leaves()) {
    const int partner = inst.partner_of_left(leaf);
    CHECK(inst.right().node(partner).label == inst.left().node(leaf).label);
    CHECK(inst.partner_of_right(partner) == leaf);
  }
  const auto lord = leaf_order(inst, identity_layout(inst), Side::Left);
  const auto rord = leaf_order(inst, identity_layout(inst), Side::Right);
  CHECK(lord == std::vector<std::string>{"a", "b", "c"});
  CHECK(rord == std::vector<std::string>{"b", "a", "c"});
  for (int leaf : inst.left().leaves())
    CHECK(lord[inst.initial_left_pos(leaf)] == inst.left().node(leaf).label);
  for (int leaf : inst.right().leaves())
    CHECK(rord[inst.initial_right_pos(leaf)] == inst.right().node(leaf).label);
}

TEST_CASE("swap bits reverse child blocks") {
  const auto inst = naive::make_instance("((a,b),(c,d));", "((a,b),(c,d));");
  Layout lay = identity_layout(inst);
  CHECK(leaf_order(inst, lay, Side::Left) ==
        std::vector<std::string>{"a", "b", "c", "d"});

  lay.left_swaps = {1, 0, 0};  // flip the root: subtree blocks trade places
  CHECK(leaf_order(inst, lay, Side::Left) ==
        std::vector<std::string>{"c", "d", "a", "b"});

  lay.left_swaps = {1, 1, 1};  // flipping everything reverses the order
  CHECK(leaf_order(inst, lay, Side::Left) ==
        std::vector<std::string>{"d", "c", "b", "a"});

  lay.left_swaps = {0, 1, 0};
  CHECK(leaf_order(inst, lay, Side::Left) ==
        std::vector<std::string>{"b", "a", "c", "d"});
}

TEST_CASE("mirror is an involution and preserves crossings") {
  Rng rng(7);
  for (int n : {3, 5, 8, 13}) {
    const auto inst = gen_random(n, RandomShape::RandomBinary, 100 + n);
    for (int rep = 0; rep < 5; ++rep) {
      const Layout lay = naive::random_layout(inst, rng);
      CHECK(mirror(mirror(lay)) == lay);
      CHECK(count_crossings(inst, lay) == count_crossings(inst, mirror(lay)));
    }
  }
}

TEST_CASE("label bijection is validated") {
  CHECK_THROWS_AS(naive::make_instance("(a,b);", "(a,c);"), Error);
  CHECK_THROWS_AS(naive::make_instance("(a,(b,c));", "(a,b);"), Error);
  CHECK_THROWS_AS(naive::make_instance("(a,b,c);", "(a,(b,c));"), Error);
}

TEST_CASE("layout validation") {
  const auto inst = naive::make_instance("((a,b),c);", "(c,(b,a));");
  Layout lay = identity_layout(inst);
  CHECK_NOTHROW(validate_layout(inst, lay));
  lay.left_swaps.push_back(0);
  CHECK_THROWS_AS(validate_layout(inst, lay), Error);
  CHECK_THROWS_AS(leaf_order(inst, lay, Side::Left), Error);
  CHECK_THROWS_AS(leaf_order_nodes(inst.left(), {0}), Error);
}

TEST_CASE("mirror flips every bit") {
  const auto inst = naive::make_instance("((a,b),(c,d));", "((d,c),(b,a));");
  Layout lay = identity_layout(inst);
  lay.left_swaps = {1, 0, 1};
  lay.right_swaps = {0, 1, 0};
  const Layout m = mirror(lay);
  CHECK(m.left_swaps == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(m.right_swaps == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(mirror(m) == lay);
  CHECK(count_crossings(inst, lay) == count_crossings(inst, m));
  // Mirroring reverses both drawn orders outright.
  auto fwd = leaf_order(inst, lay, Side::Left);
  auto rev = leaf_order(inst, m, Side::Left);
  std::reverse(rev.begin(), rev.end());
  CHECK(fwd == rev);
}
