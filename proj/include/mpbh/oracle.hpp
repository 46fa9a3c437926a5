#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mpbh/levels.hpp"
#include "mpbh/tree.hpp"

namespace mpbh {

// Exhaustive reference solver for tiny instances. Enumerates every labeled
// spanning tree through its Prufer sequence, so the instance is hard-capped
// at n <= 8 (8^6 = 262144 trees).
struct OracleResult {
  double w = 0.0;
  BoundedTree tree;
  long long enumerated = 0;  // trees visited before the diameter filter
};

namespace detail {

inline std::vector<std::array<int, 2>> prufer_to_edges(const std::vector<int>& seq, int n) {
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::vector<std::array<int, 2>> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) {
        leaf = v;
        break;
      }
    }
    edges.push_back({leaf, s});
    deg[leaf] = 0;
    --deg[s];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
        break;
      }
    }
  }
  return edges;
}

// All-pairs hop distances of a tree given its edge list.
inline void tree_distances(const std::vector<std::array<int, 2>>& edges, int n,
                           std::vector<std::vector<int>>& dist) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  dist.assign(n, std::vector<int>(n, -1));
  std::vector<int> queue;
  for (int src = 0; src < n; ++src) {
    auto& d = dist[src];
    d[src] = 0;
    queue.assign(1, src);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for (int u : adj[v]) {
        if (d[u] < 0) {
          d[u] = d[v] + 1;
          queue.push_back(u);
        }
      }
    }
  }
}

}  // namespace detail

inline OracleResult exact_optimum(const Instance& inst) {
  const int n = inst.size();
  if (n > 8) throw std::invalid_argument("exact_optimum is capped at n <= 8");
  const int dhalf = inst.max_level();

  std::vector<int> seq(std::max(0, n - 2), 0);
  std::vector<std::array<int, 2>> best_edges;
  double best_w = std::numeric_limits<double>::infinity();
  long long enumerated = 0;
  std::vector<std::vector<int>> dist;
  std::vector<double> power(n);

  for (;;) {
    ++enumerated;
    const auto edges = detail::prufer_to_edges(seq, n);
    detail::tree_distances(edges, n, dist);
    int diameter = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) diameter = std::max(diameter, dist[i][j]);
    }
    if (diameter <= inst.hop_bound()) {
      std::fill(power.begin(), power.end(), 0.0);
      for (const auto& e : edges) {
        const double c = inst.cost(e[0], e[1]);
        if (c > power[e[0]]) power[e[0]] = c;
        if (c > power[e[1]]) power[e[1]] = c;
      }
      double w = 0.0;
      for (double p : power) w += p;
      if (w < best_w) {
        best_w = w;
        best_edges = edges;
      }
    }
    // next sequence in lexicographic order
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  if (best_edges.empty())
    throw std::runtime_error("no spanning tree satisfies the hop bound");

  // Root the winning tree: pick the lexicographically first center choice
  // whose levels fit the bound (one always exists when the diameter does).
  detail::tree_distances(best_edges, n, dist);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : best_edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  int root = -1, second = -1;
  if (!inst.two_centers()) {
    for (int v = 0; v < n && root < 0; ++v) {
      int ecc = 0;
      for (int u = 0; u < n; ++u) ecc = std::max(ecc, dist[v][u]);
      if (ecc <= dhalf) root = v;
    }
  } else {
    for (int r = 0; r < n && root < 0; ++r) {
      for (int s = 0; s < n && root < 0; ++s) {
        if (s == r || dist[r][s] != 1) continue;
        int worst = 0;
        for (int u = 0; u < n; ++u) worst = std::max(worst, std::min(dist[r][u], dist[s][u]));
        if (worst <= dhalf) {
          root = r;
          second = s;
        }
      }
    }
  }
  if (root < 0) throw std::runtime_error("no feasible rooting found");

  std::vector<int> parent(n, -1);
  std::vector<int> queue{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  if (second >= 0) {
    parent[second] = root;
    seen[second] = 1;
    queue.push_back(second);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int v = queue[h];
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  OracleResult res;
  res.tree = tree_from_parents(inst, root, second, std::move(parent));
  res.w = res.tree.objective;
  res.enumerated = enumerated;
  return res;
}

// Exhaustive counterpart of decode_levels: minimum objective over every
// parent assignment where each non-center vertex hangs below a strictly
// smaller array entry.
inline double exact_decode_check(const LevelArray& arr, const Instance& inst) {
  const int n = inst.size();
  if (n > 8) throw std::invalid_argument("exact_decode_check is capped at n <= 8");
  if (arr.size() != n) throw std::invalid_argument("level array size mismatch");
  std::vector<int> zeros;
  for (int v = 0; v < n; ++v) {
    if (arr.levels[v] == 0) zeros.push_back(v);
  }
  if (static_cast<int>(zeros.size()) != (inst.two_centers() ? 2 : 1))
    throw std::invalid_argument("malformed center count");
  const int root = zeros[0];
  const int second = inst.two_centers() ? zeros[1] : -1;

  std::vector<int> free_vertices;
  std::vector<std::vector<int>> cands;
  for (int v = 0; v < n; ++v) {
    if (v == root || v == second) continue;
    std::vector<int> c;
    for (int j = 0; j < n; ++j) {
      if (arr.levels[j] < arr.levels[v]) c.push_back(j);
    }
    free_vertices.push_back(v);
    cands.push_back(std::move(c));
  }

  std::vector<int> parent(n, -1);
  if (second >= 0) parent[second] = root;
  std::vector<double> power(n);
  std::vector<std::size_t> pick(free_vertices.size(), 0);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    for (std::size_t i = 0; i < free_vertices.size(); ++i)
      parent[free_vertices[i]] = cands[i][pick[i]];
    std::fill(power.begin(), power.end(), 0.0);
    for (int v = 0; v < n; ++v) {
      if (v == root) continue;
      const double c = inst.cost(v, parent[v]);
      if (c > power[v]) power[v] = c;
      if (c > power[parent[v]]) power[parent[v]] = c;
    }
    double w = 0.0;
    for (double p : power) w += p;
    if (w < best) best = w;

    int pos = static_cast<int>(pick.size()) - 1;
    while (pos >= 0 && pick[pos] + 1 == cands[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return best;
}

}  // namespace mpbh
