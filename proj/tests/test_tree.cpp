#include <cmath>

#include "doctest.h"
#include "mpbh/mpbh.hpp"
#include "test_util.hpp"

using namespace mpbh;

TEST_CASE("objective sums per-node max incident costs") {
  // two nodes, one edge: both endpoints see it
  Instance two = build_instance({{0, 0}, {1, 0}}, 2);
  BoundedTree t2 = tree_from_parents(two, 0, -1, {-1, 0});
  CHECK(objective(t2, two) == doctest::Approx(2.0));

  // path rooted at the middle: maxima 1, 4, 4
  Instance path = build_instance({{0, 0}, {1, 0}, {3, 0}}, 4);
  BoundedTree tp = tree_from_parents(path, 1, -1, {1, -1, 1});
  CHECK(objective(tp, path) == doctest::Approx(9.0));

  // star on the unit-square corners centered at the origin
  Instance star = build_instance({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
  BoundedTree ts = tree_from_parents(star, 0, -1, {-1, 0, 0, 0});
  CHECK(objective(ts, star) == doctest::Approx(6.0));
}

TEST_CASE("objective rejects a size mismatch") {
  Instance a = build_instance({{0, 0}, {1, 0}}, 2);
  Instance b = build_instance({{0, 0}, {1, 0}, {2, 0}}, 2);
  BoundedTree t = tree_from_parents(a, 0, -1, {-1, 0});
  CHECK_THROWS_AS(objective(t, b), std::invalid_argument);
}

TEST_CASE("level test matches the intended center structure") {
  Instance d1 = build_instance({{0, 0}, {1, 0}}, 1);
  BoundedTree t1 = tree_from_parents(d1, 0, 1, {-1, 0});
  CHECK(is_feasible(t1, d1));

  // path of four rooted at an end exceeds level 1 when D = 2
  Instance d2 = build_instance({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 2);
  BoundedTree chain = tree_from_parents(d2, 0, -1, {-1, 0, 1, 2});
  CHECK_FALSE(is_feasible(chain, d2));
  CHECK(hop_diameter(chain) == 3);

  // the same path rooted at its center edge is fine for D = 3
  Instance d3 = build_instance({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 3);
  BoundedTree centered = tree_from_parents(d3, 1, 2, {1, -1, 1, 2});
  CHECK(centered.level == std::vector<int>{1, 0, 0, 1});
  CHECK(is_feasible(centered, d3));
}

TEST_CASE("tree_from_parents validates the arborescence") {
  Instance inst = build_instance({{0, 0}, {1, 0}, {2, 0}}, 4);
  CHECK_THROWS_AS(tree_from_parents(inst, 0, -1, {-1, 2, 1}), std::invalid_argument);  // cycle
  CHECK_THROWS_AS(tree_from_parents(inst, 0, -1, {-1, 0}), std::invalid_argument);     // size
  CHECK_THROWS_AS(tree_from_parents(inst, 0, 2, {-1, 0, 1}), std::invalid_argument);   // bad second center
}

TEST_CASE("copies are deep and independent") {
  Rng rng = make_rng(7);
  Instance inst = testutil::random_instance(12, 6, rng);
  BoundedTree t = greedy_hop_bounded(inst);
  BoundedTree c = copy_tree(t);
  CHECK(c.objective == t.objective);
  CHECK(is_feasible(c, inst));

  random_branch_reattaching(c, inst, 4, rng);
  CHECK(t.parent == greedy_hop_bounded(inst).parent);  // original untouched
  CHECK(is_feasible(t, inst));
}

TEST_CASE("cached objective tracks the from-scratch value through move sequences") {
  Rng rng = make_rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 6 + static_cast<int>(next_index(rng, 20));
    const int d = 2 + static_cast<int>(next_index(rng, 7));
    Instance inst = testutil::random_instance(n, d, rng);
    BoundedTree t = randomized_construct(inst, rng);
    for (int step = 0; step < 300; ++step) {
      const auto moves = testutil::all_moves(t, inst);
      if (moves.empty()) break;
      apply_move(t, inst, moves[next_index(rng, moves.size())]);
      const double cached = t.objective;
      CHECK(std::abs(cached - testutil::brute_objective(t, inst)) <= 1e-9);
      CHECK(std::abs(cached - objective(t, inst)) <= 1e-9);
    }
  }
}

TEST_CASE("level feasibility implies the BFS diameter bound") {
  Rng rng = make_rng(123);
  int produced = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 4 + static_cast<int>(next_index(rng, 27));  // up to 30
    const int d = 2 + static_cast<int>(next_index(rng, 8));
    Instance inst = testutil::random_instance(n, d, rng);
    BoundedTree t = randomized_construct(inst, rng);
    random_branch_reattaching(t, inst, 3, rng);
    REQUIRE(is_feasible(t, inst));
    REQUIRE(hop_diameter(t) <= inst.hop_bound());
    ++produced;
  }
  CHECK(produced == 500);

  // both parities, small exhaustive spot checks
  for (int d : {3, 4}) {
    Instance inst = build_instance({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}}, d);
    Rng r2 = make_rng(5);
    for (int rep = 0; rep < 500; ++rep) {
      BoundedTree t = randomized_construct(inst, r2);
      CHECK(is_feasible(t, inst));
      CHECK(hop_diameter(t) <= d);
    }
  }
}

TEST_CASE("corrupted representations fail the level test") {
  Instance inst = build_instance({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 6);
  BoundedTree t = tree_from_parents(inst, 0, -1, {-1, 0, 1, 2});
  REQUIRE(is_feasible(t, inst));

  BoundedTree broken_level = t;
  broken_level.level[3] = 9;
  CHECK_FALSE(is_feasible(broken_level, inst));

  BoundedTree extra_center = t;
  extra_center.second_center = 1;  // D even: there is no second center
  CHECK_FALSE(is_feasible(extra_center, inst));

  BoundedTree bad_parent = t;
  bad_parent.parent[3] = 0;  // children list no longer matches
  CHECK_FALSE(is_feasible(bad_parent, inst));
}

TEST_CASE("any feasible tree dominates the squared-distance MST cost") {
  Rng rng = make_rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 5 + static_cast<int>(next_index(rng, 16));
    const int d = 2 + static_cast<int>(next_index(rng, 8));
    Instance inst = testutil::random_instance(n, d, rng);
    const double mst = testutil::mst_cost(inst);
    BoundedTree t = randomized_construct(inst, rng);
    CHECK(t.objective >= mst - 1e-9);
    vnd(t, inst);
    CHECK(t.objective >= mst - 1e-9);
  }
}
