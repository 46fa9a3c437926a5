#include <cmath>

#include "doctest.h"
#include "mpbh/mpbh.hpp"
#include "test_util.hpp"

using namespace mpbh;

TEST_CASE("encode copies the tree levels") {
  Instance even = build_instance({{0, 0}, {1, 0}}, 2);
  BoundedTree t = tree_from_parents(even, 0, -1, {-1, 0});
  CHECK(encode_levels(t).levels == std::vector<int>{0, 1});

  Instance odd = build_instance({{0, 0}, {1, 0}}, 1);
  BoundedTree t2 = tree_from_parents(odd, 0, 1, {-1, 0});
  CHECK(encode_levels(t2).levels == std::vector<int>{0, 0});

  Instance d3 = build_instance({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 3);
  BoundedTree t3 = tree_from_parents(d3, 1, 2, {1, -1, 1, 2});
  CHECK(encode_levels(t3).levels == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("level array validation") {
  Instance even = build_instance({{0, 0}, {1, 0}, {2, 0}}, 4);
  CHECK(level_array_valid(LevelArray{{0, 1, 2}}, even));
  CHECK_FALSE(level_array_valid(LevelArray{{0, 0, 1}}, even));   // two zeros, even D
  CHECK_FALSE(level_array_valid(LevelArray{{0, 1, 3}}, even));   // above the cap
  CHECK_FALSE(level_array_valid(LevelArray{{0, 1}}, even));      // wrong length

  Instance odd = build_instance({{0, 0}, {1, 0}, {2, 0}}, 3);
  CHECK(level_array_valid(LevelArray{{0, 0, 1}}, odd));
  CHECK_FALSE(level_array_valid(LevelArray{{0, 1, 1}}, odd));    // one zero, odd D
}

TEST_CASE("decode on forced assignments") {
  Instance two = build_instance({{0, 0}, {1, 0}}, 2);
  BoundedTree t = decode_levels(LevelArray{{0, 1}}, two);
  CHECK(t.objective == doctest::Approx(2.0 * two.cost(0, 1)));
  CHECK(t.parent[1] == 0);

  // both vertices can only attach to the center; note the middle vertex does
  // not relay: per-node maxima are 9, 1, 9
  Instance line = build_instance({{0, 0}, {1, 0}, {3, 0}}, 4);
  BoundedTree t3 = decode_levels(LevelArray{{0, 1, 1}}, line);
  CHECK(t3.parent[1] == 0);
  CHECK(t3.parent[2] == 0);
  CHECK(t3.objective == doctest::Approx(19.0));
}

TEST_CASE("decode picks the smallest parent id on ties") {
  // vertices 1 and 2 coincide, so vertex 3 sees equal increments
  Instance inst = build_instance({{0, 0}, {0.5, 0}, {0.5, 0}, {1, 0}}, 4);
  BoundedTree t = decode_levels(LevelArray{{0, 1, 1, 2}}, inst);
  CHECK(t.parent[3] == 1);
}

TEST_CASE("decode rejects malformed input") {
  Instance even = build_instance({{0, 0}, {1, 0}, {2, 0}}, 4);
  CHECK_THROWS_AS(decode_levels(LevelArray{{0, 0, 1}}, even), std::invalid_argument);
  CHECK_THROWS_AS(decode_levels(LevelArray{{0, 1, 5}}, even), std::invalid_argument);
  CHECK_THROWS_AS(decode_levels(LevelArray{{0, 1}}, even), std::invalid_argument);
}

TEST_CASE("decode stores recomputed true depths") {
  // vertex 2 may sit at array level 2 yet attach directly to the root
  Instance inst = build_instance({{0, 0}, {1, 0}, {0.1, 0}}, 4);
  BoundedTree t = decode_levels(LevelArray{{0, 1, 2}}, inst);
  CHECK(t.parent[2] == 0);
  CHECK(t.level[2] == 1);  // true depth, not the array entry
  CHECK(is_feasible(t, inst));
}

TEST_CASE("decode never beats the exhaustive assignment oracle") {
  Rng rng = make_rng(2024);
  int equal = 0, total = 0;
  for (int rep = 0; rep < 120; ++rep) {
    Instance inst = testutil::random_instance(5, 4, rng);
    LevelArray arr;
    arr.levels.assign(5, 0);
    const int zero = static_cast<int>(next_index(rng, 5));
    for (int v = 0; v < 5; ++v)
      arr.levels[v] = v == zero ? 0 : 1 + static_cast<int>(next_index(rng, 2));
    BoundedTree t = decode_levels(arr, inst);
    const double exact = exact_decode_check(arr, inst);
    CHECK(t.objective >= exact - 1e-9);
    if (std::abs(t.objective - exact) <= 1e-9) ++equal;
    ++total;
  }
  // the greedy scan recovers the exhaustive optimum on most arrays but is not
  // guaranteed to (measured 494/500 at development time)
  CHECK(equal >= total * 9 / 10);
}

TEST_CASE("encode after decode keeps the zero positions") {
  Rng rng = make_rng(55);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + static_cast<int>(next_index(rng, 10));
    const int d = 2 + static_cast<int>(next_index(rng, 6));
    Instance inst = testutil::random_instance(n, d, rng);
    LevelArray arr;
    arr.levels.assign(n, 0);
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    shuffle(rng, ids);
    const int centers = inst.two_centers() ? 2 : 1;
    for (int v = 0; v < n; ++v) {
      const bool is_zero = v == ids[0] || (centers == 2 && v == ids[1]);
      arr.levels[v] =
          is_zero ? 0 : 1 + static_cast<int>(next_index(rng, inst.max_level()));
    }
    BoundedTree t = decode_levels(arr, inst);
    REQUIRE(testutil::feasible_both_ways(t, inst));
    const LevelArray back = encode_levels(t);
    for (int v = 0; v < n; ++v) CHECK((back.levels[v] == 0) == (arr.levels[v] == 0));
  }
}
