#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mpbh/tree.hpp"

namespace mpbh {

// Integer vertex-level encoding shared by the GLS crossover and the ACO
// paths: one zero entry for an even hop bound, two for an odd one, all
// entries within [0, floor(D / 2)].
struct LevelArray {
  std::vector<int> levels;

  int size() const { return static_cast<int>(levels.size()); }
};

inline bool level_array_valid(const LevelArray& arr, const Instance& inst) {
  if (arr.size() != inst.size()) return false;
  int zeros = 0;
  for (int l : arr.levels) {
    if (l < 0 || l > inst.max_level()) return false;
    if (l == 0) ++zeros;
  }
  return zeros == (inst.two_centers() ? 2 : 1);
}

inline LevelArray encode_levels(const BoundedTree& tree) {
  return LevelArray{tree.level};
}

// Greedy decoding. Centers come from the zero entries (lowest id becomes the
// root). Every other vertex, processed by ascending (entry, id), attaches to
// the vertex with a strictly smaller entry that adds the least to the
// objective: edge cost plus the growth of the parent's node power. Ties pick
// the smallest parent id. Stored levels are the true depths of the final
// parent structure, which may undercut the array entries.
inline BoundedTree decode_levels(const LevelArray& arr, const Instance& inst) {
  const int n = inst.size();
  if (arr.size() != n) throw std::invalid_argument("level array size mismatch");
  std::vector<int> zeros;
  for (int v = 0; v < n; ++v) {
    const int l = arr.levels[v];
    if (l < 0 || l > inst.max_level())
      throw std::invalid_argument("level entry out of range");
    if (l == 0) zeros.push_back(v);
  }
  if (static_cast<int>(zeros.size()) != (inst.two_centers() ? 2 : 1))
    throw std::invalid_argument("malformed center count");

  const int root = zeros[0];
  const int second = inst.two_centers() ? zeros[1] : -1;
  std::vector<int> parent(n, -1);
  std::vector<double> power(n, 0.0);
  if (second >= 0) {
    parent[second] = root;
    power[root] = power[second] = inst.cost(root, second);
  }

  std::vector<int> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (v != root && v != second) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return arr.levels[a] < arr.levels[b]; });

  for (int v : order) {
    int best = -1;
    double best_cost = 0.0;
    double best_inc = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (arr.levels[j] >= arr.levels[v]) continue;
      const double c = inst.cost(v, j);
      const double inc = c + std::max(0.0, c - power[j]);
      if (inc < best_inc) {
        best_inc = inc;
        best = j;
        best_cost = c;
      }
    }
    parent[v] = best;
    power[v] = best_cost;
    if (best_cost > power[best]) power[best] = best_cost;
  }
  return tree_from_parents(inst, root, second, std::move(parent));
}

}  // namespace mpbh
