#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mpbh/instance.hpp"

namespace mpbh {

// Spanning tree stored as a rooted arborescence with explicit centers.
//
// level[v] is the hop count from v to its nearest center. The root has level
// 0; with an odd hop bound the second center is a child of the root and also
// has level 0, so levels restart inside its subtree. The tree satisfies the
// hop-diameter bound exactly when every level is at most floor(D / 2).
struct BoundedTree {
  int root = -1;
  int second_center = -1;             // -1 unless the hop bound is odd
  std::vector<int> parent;            // -1 for the root only
  std::vector<int> level;
  std::vector<std::vector<int>> children;
  std::vector<double> node_max_cost;  // per-vertex max incident edge cost
  double objective = 0.0;             // cached sum of node_max_cost

  int size() const { return static_cast<int>(parent.size()); }
  bool is_center(int v) const { return v == root || v == second_center; }
};

namespace detail {

// Levels from a bare parent array: root and second center at 0, otherwise one
// more than the parent. Iterative parent-walks, no adjacency needed. Throws
// on cycles and broken chains.
inline void compute_levels(const std::vector<int>& parent, int root,
                           int second_center, std::vector<int>& level) {
  const int n = static_cast<int>(parent.size());
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  if (second_center >= 0 && parent[second_center] != root)
    throw std::invalid_argument("second center must be a child of the root");
  level.assign(n, -1);
  level[root] = 0;
  if (second_center >= 0) level[second_center] = 0;
  std::vector<int> chain;
  for (int v = 0; v < n; ++v) {
    int u = v;
    chain.clear();
    while (level[u] < 0) {
      chain.push_back(u);
      if (static_cast<int>(chain.size()) > n)
        throw std::invalid_argument("parent links contain a cycle");
      u = parent[u];
      if (u < 0 || u >= n) throw std::invalid_argument("broken parent chain");
    }
    int base = level[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) level[*it] = ++base;
  }
}

// Rebuilds children lists, levels, node powers and the cached objective from
// (root, second_center, parent). Throws if the links do not form a spanning
// arborescence.
inline void refresh_derived(BoundedTree& t, const Instance& inst) {
  const int n = t.size();
  if (n != inst.size()) throw std::invalid_argument("tree/instance size mismatch");
  if (t.root < 0 || t.root >= n || t.parent[t.root] != -1)
    throw std::invalid_argument("root must have no parent");
  if (t.second_center == t.root)
    throw std::invalid_argument("second center equals root");
  compute_levels(t.parent, t.root, t.second_center, t.level);
  t.children.assign(n, {});
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    t.children[t.parent[v]].push_back(v);
  }
  t.node_max_cost.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    const double c = inst.cost(v, t.parent[v]);
    if (c > t.node_max_cost[v]) t.node_max_cost[v] = c;
    if (c > t.node_max_cost[t.parent[v]]) t.node_max_cost[t.parent[v]] = c;
  }
  double total = 0.0;
  for (double p : t.node_max_cost) total += p;
  t.objective = total;
}

}  // namespace detail

inline BoundedTree tree_from_parents(const Instance& inst, int root,
                                     int second_center, std::vector<int> parent) {
  BoundedTree t;
  t.root = root;
  t.second_center = second_center;
  t.parent = std::move(parent);
  if (t.size() != inst.size()) throw std::invalid_argument("parent array size mismatch");
  detail::refresh_derived(t, inst);
  return t;
}

// From-scratch objective: recomputes every node's max incident edge cost and
// the total, refreshing both caches.
inline double objective(BoundedTree& t, const Instance& inst) {
  const int n = t.size();
  if (n != inst.size()) throw std::invalid_argument("tree/instance size mismatch");
  t.node_max_cost.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    const double c = inst.cost(v, t.parent[v]);
    if (c > t.node_max_cost[v]) t.node_max_cost[v] = c;
    if (c > t.node_max_cost[t.parent[v]]) t.node_max_cost[t.parent[v]] = c;
  }
  double total = 0.0;
  for (double p : t.node_max_cost) total += p;
  t.objective = total;
  return total;
}

// Level test: center structure matches the bound's parity, levels are
// consistent with the parent links, and no level exceeds floor(D / 2).
// Structural corruption reports as infeasible rather than throwing.
inline bool is_feasible(const BoundedTree& t, const Instance& inst) {
  const int n = inst.size();
  if (t.size() != n || static_cast<int>(t.level.size()) != n ||
      static_cast<int>(t.children.size()) != n)
    return false;
  if (t.root < 0 || t.root >= n || t.parent[t.root] != -1) return false;
  if (t.level[t.root] != 0) return false;
  if (inst.two_centers()) {
    if (t.second_center < 0 || t.second_center >= n || t.second_center == t.root)
      return false;
    if (t.parent[t.second_center] != t.root || t.level[t.second_center] != 0)
      return false;
  } else if (t.second_center != -1) {
    return false;
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{t.root};
  seen[t.root] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (t.level[v] > inst.max_level()) return false;
    for (int c : t.children[v]) {
      if (c < 0 || c >= n || seen[c] || t.parent[c] != v) return false;
      const int expect = (c == t.second_center) ? 0 : t.level[v] + 1;
      if (t.level[c] != expect) return false;
      seen[c] = 1;
      ++reached;
      stack.push_back(c);
    }
  }
  return reached == n;
}

// Undirected hop diameter by double BFS (exact on trees). Independent of the
// rooted representation; used to cross-check the level test.
inline int hop_diameter(const BoundedTree& t) {
  const int n = t.size();
  if (n <= 1) return 0;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    adj[v].push_back(t.parent[v]);
    adj[t.parent[v]].push_back(v);
  }
  std::vector<int> dist(n);
  auto bfs = [&](int src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for (int u : adj[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    int far = src;
    for (int v = 0; v < n; ++v) {
      if (dist[v] > dist[far]) far = v;
    }
    return far;
  };
  const int a = bfs(0);
  const int b = bfs(a);
  return dist[b];
}

inline BoundedTree copy_tree(const BoundedTree& t) { return t; }

}  // namespace mpbh
