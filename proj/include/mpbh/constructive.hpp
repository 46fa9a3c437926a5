#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "mpbh/rng.hpp"
#include "mpbh/tree.hpp"

namespace mpbh {

namespace detail {

// D = 1 only admits the two-vertex tree: any third vertex would sit two hops
// from one endpoint.
inline void require_connectable(const Instance& inst) {
  if (inst.hop_bound() == 1 && inst.size() > 2)
    throw std::invalid_argument("no spanning tree satisfies hop bound 1 with more than 2 points");
}

}  // namespace detail

// Vertex closest to the point-set centroid; smallest id on ties.
inline int auto_center(const Instance& inst) {
  const int n = inst.size();
  double cx = 0.0, cy = 0.0;
  for (const Point& p : inst.points()) {
    cx += p.x;
    cy += p.y;
  }
  cx /= n;
  cy /= n;
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int v = 0; v < n; ++v) {
    const double dx = inst.point(v).x - cx;
    const double dy = inst.point(v).y - cy;
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

// Prim-style growth from the center(s): each step attaches the unattached
// vertex whose cheapest admissible parent (level below floor(D / 2)) adds the
// least to the objective. Ties resolve to the smallest vertex id, then the
// smallest parent id. center = -1 selects auto_center.
inline BoundedTree greedy_hop_bounded(const Instance& inst, int center = -1) {
  detail::require_connectable(inst);
  const int n = inst.size();
  const int dhalf = inst.max_level();
  if (center < -1 || center >= n) throw std::invalid_argument("center out of range");
  const int root = center >= 0 ? center : auto_center(inst);

  std::vector<int> parent(n, -1);
  std::vector<int> level(n, -1);
  std::vector<double> power(n, 0.0);
  level[root] = 0;
  int attached = 1;

  int second = -1;
  if (inst.two_centers()) {
    double best = std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
      if (v == root) continue;
      if (inst.cost(root, v) < best) {
        best = inst.cost(root, v);
        second = v;
      }
    }
    parent[second] = root;
    level[second] = 0;
    power[root] = power[second] = inst.cost(root, second);
    ++attached;
  }

  while (attached < n) {
    int pick_v = -1, pick_p = -1;
    double pick_inc = std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
      if (level[v] >= 0) continue;
      for (int p = 0; p < n; ++p) {
        if (level[p] < 0 || level[p] >= dhalf) continue;
        const double c = inst.cost(v, p);
        const double inc = c + std::max(0.0, c - power[p]);
        if (inc < pick_inc) {
          pick_inc = inc;
          pick_v = v;
          pick_p = p;
        }
      }
    }
    parent[pick_v] = pick_p;
    level[pick_v] = level[pick_p] + 1;
    const double c = inst.cost(pick_v, pick_p);
    power[pick_v] = c;
    if (c > power[pick_p]) power[pick_p] = c;
    ++attached;
  }
  return tree_from_parents(inst, root, second, std::move(parent));
}

// Random center(s); the remaining vertices attach in shuffled order, each to
// an admissible parent sampled with probability inversely proportional to the
// objective increase.
inline BoundedTree randomized_construct(const Instance& inst, Rng& rng) {
  detail::require_connectable(inst);
  const int n = inst.size();
  const int dhalf = inst.max_level();
  const int root = static_cast<int>(next_index(rng, n));

  std::vector<int> parent(n, -1);
  std::vector<int> level(n, -1);
  std::vector<double> power(n, 0.0);
  level[root] = 0;

  int second = -1;
  if (inst.two_centers()) {
    std::size_t pick = next_index(rng, n - 1);
    second = static_cast<int>(pick) + (static_cast<int>(pick) >= root ? 1 : 0);
    parent[second] = root;
    level[second] = 0;
    power[root] = power[second] = inst.cost(root, second);
  }

  std::vector<int> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (v != root && v != second) order.push_back(v);
  }
  shuffle(rng, order);

  std::vector<int> candidates;
  std::vector<double> weights;
  for (int v : order) {
    candidates.clear();
    weights.clear();
    for (int p = 0; p < n; ++p) {
      if (level[p] < 0 || level[p] >= dhalf) continue;
      const double c = inst.cost(v, p);
      const double inc = c + std::max(0.0, c - power[p]);
      candidates.push_back(p);
      weights.push_back(1.0 / (inc + 1e-12));
    }
    const int p = candidates[sample_weighted(rng, weights)];
    parent[v] = p;
    level[v] = level[p] + 1;
    const double c = inst.cost(v, p);
    power[v] = c;
    if (c > power[p]) power[p] = c;
  }
  return tree_from_parents(inst, root, second, std::move(parent));
}

// Best of one greedy tree (auto center) and attempts-1 randomized draws.
inline BoundedTree best_initial(const Instance& inst, int attempts, Rng& rng) {
  if (attempts < 1) throw std::invalid_argument("attempts must be >= 1");
  BoundedTree best = greedy_hop_bounded(inst);
  for (int i = 1; i < attempts; ++i) {
    BoundedTree t = randomized_construct(inst, rng);
    if (t.objective < best.objective) best = std::move(t);
  }
  return best;
}

}  // namespace mpbh
