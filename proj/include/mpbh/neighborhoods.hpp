#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpbh/rng.hpp"
#include "mpbh/tree.hpp"

namespace mpbh {

enum class MoveKind { LevelChange, SameLevelParentChange, CenterChange };

// For the two reparenting kinds, `vertex` moves under `target`. For
// CenterChange, `vertex` is the outgoing center and `target` the incoming one.
// delta_w is the exact objective change of applying the move.
struct Move {
  MoveKind kind = MoveKind::LevelChange;
  int vertex = -1;
  int target = -1;
  double delta_w = 0.0;
};

// Pre-move snapshot; revert_move restores it bit for bit.
using TreeUndo = BoundedTree;

// Read-only per-tree data shared by one candidate-generation pass: DFS
// timestamps for descendant tests, subtree level maxima, and the two largest
// incident edge costs per vertex for O(1) "max without this edge" queries.
struct TreeScan {
  std::vector<int> tin, tout;
  std::vector<int> subtree_max_level;
  std::vector<double> child_max;  // max cost to own children
  std::vector<double> top1, top2;
  std::vector<int> top1_neighbor;

  bool in_subtree(int ancestor, int v) const {
    return tin[ancestor] <= tin[v] && tout[v] <= tout[ancestor];
  }
  // Max incident cost at p with the edge to neighbor v removed.
  double max_excluding(int p, int v) const {
    return top1_neighbor[p] == v ? top2[p] : top1[p];
  }

  static TreeScan build(const BoundedTree& t, const Instance& inst) {
    const int n = t.size();
    TreeScan s;
    s.tin.assign(n, 0);
    s.tout.assign(n, 0);
    s.subtree_max_level.assign(n, 0);
    s.child_max.assign(n, 0.0);
    s.top1.assign(n, 0.0);
    s.top2.assign(n, 0.0);
    s.top1_neighbor.assign(n, -1);

    std::vector<int> order;
    order.reserve(n);
    std::vector<std::pair<int, std::size_t>> frames;
    frames.emplace_back(t.root, 0);
    int clock = 0;
    s.tin[t.root] = clock++;
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      if (i < t.children[v].size()) {
        const int c = t.children[v][i++];
        s.tin[c] = clock++;
        frames.emplace_back(c, 0);
      } else {
        s.tout[v] = clock++;
        order.push_back(v);  // post-order: children before parents
        frames.pop_back();
      }
    }
    for (int v : order) {
      int m = t.level[v];
      for (int c : t.children[v]) m = std::max(m, s.subtree_max_level[c]);
      s.subtree_max_level[v] = m;
    }
    auto feed = [&s](int v, int nbr, double c) {
      if (c > s.top1[v]) {
        s.top2[v] = s.top1[v];
        s.top1[v] = c;
        s.top1_neighbor[v] = nbr;
      } else if (c > s.top2[v]) {
        s.top2[v] = c;
      }
    };
    for (int v = 0; v < n; ++v) {
      if (v == t.root) continue;
      const double c = inst.cost(v, t.parent[v]);
      feed(v, t.parent[v], c);
      feed(t.parent[v], v, c);
      if (c > s.child_max[t.parent[v]]) s.child_max[t.parent[v]] = c;
    }
    return s;
  }
};

namespace detail {

// Objective change of moving v under `target`: only v, its old parent and the
// target change node power.
inline double reparent_delta(const BoundedTree& t, const Instance& inst,
                             const TreeScan& s, int v, int target) {
  const int p_old = t.parent[v];
  const double c_new = inst.cost(v, target);
  const double m_v = std::max(s.child_max[v], c_new);
  const double m_po = s.max_excluding(p_old, v);
  const double m_t = std::max(t.node_max_cost[target], c_new);
  return (m_v - t.node_max_cost[v]) + (m_po - t.node_max_cost[p_old]) +
         (m_t - t.node_max_cost[target]);
}

inline void apply_reparent(BoundedTree& t, const Instance& inst, int v, int target) {
  const int p_old = t.parent[v];
  if (target == p_old) return;
  auto& siblings = t.children[p_old];
  siblings.erase(std::find(siblings.begin(), siblings.end(), v));
  t.children[target].push_back(v);
  t.parent[v] = target;

  const double c_new = inst.cost(v, target);
  double m_v = c_new;
  for (int c : t.children[v]) m_v = std::max(m_v, inst.cost(v, c));
  double m_po = t.parent[p_old] >= 0 ? inst.cost(p_old, t.parent[p_old]) : 0.0;
  for (int c : t.children[p_old]) m_po = std::max(m_po, inst.cost(p_old, c));
  const double m_t = std::max(t.node_max_cost[target], c_new);
  t.objective += (m_v - t.node_max_cost[v]) + (m_po - t.node_max_cost[p_old]) +
                 (m_t - t.node_max_cost[target]);
  t.node_max_cost[v] = m_v;
  t.node_max_cost[p_old] = m_po;
  t.node_max_cost[target] = m_t;

  const int shift = t.level[target] + 1 - t.level[v];
  if (shift != 0) {
    std::vector<int> stack{v};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      t.level[x] += shift;
      for (int c : t.children[x]) stack.push_back(c);
    }
  }
}

// Four-step center swap on a bare parent array; returns the new
// (root, second_center). The outgoing center keeps no children.
inline std::pair<int, int> rewire_center(const BoundedTree& t, int old_center,
                                         int new_center, std::vector<int>& parent) {
  const int vp = t.parent[new_center];
  for (int x : t.children[old_center]) {
    if (x != new_center) parent[x] = new_center;
  }
  int root = t.root;
  int second = t.second_center;
  if (old_center == t.root) {
    root = new_center;
    parent[new_center] = -1;
  } else {
    second = new_center;
    parent[new_center] = t.root;
  }
  parent[old_center] = (old_center != vp) ? vp : new_center;
  return {root, second};
}

inline void apply_center_change(BoundedTree& t, const Instance& inst,
                                int old_center, int new_center) {
  const auto [root, second] = rewire_center(t, old_center, new_center, t.parent);
  t.root = root;
  t.second_center = second;
  refresh_derived(t, inst);
}

}  // namespace detail

// Every vertex u that is not a descendant of v, sits at a level other than
// level(v) - 1, and leaves the subtree of v within the level cap once v hangs
// below u.
inline void level_change_candidates(const BoundedTree& t, const Instance& inst,
                                    int v, const TreeScan& scan, std::vector<Move>& out) {
  if (t.is_center(v)) throw std::invalid_argument("centers cannot be reparented");
  const int n = t.size();
  const int lv = t.level[v];
  const int depth_below = scan.subtree_max_level[v] - lv;
  for (int u = 0; u < n; ++u) {
    if (u == v || scan.in_subtree(v, u)) continue;
    if (t.level[u] == lv - 1) continue;
    if (t.level[u] + 1 + depth_below > inst.max_level()) continue;
    out.push_back({MoveKind::LevelChange, v, u, detail::reparent_delta(t, inst, scan, v, u)});
  }
}

inline std::vector<Move> level_change_candidates(const BoundedTree& t,
                                                 const Instance& inst, int v) {
  std::vector<Move> out;
  const TreeScan scan = TreeScan::build(t, inst);
  level_change_candidates(t, inst, v, scan, out);
  return out;
}

// Every u != parent(v) with level(v) - 1; such u is never a descendant of v.
inline void same_level_parent_candidates(const BoundedTree& t, const Instance& inst,
                                         int v, const TreeScan& scan,
                                         std::vector<Move>& out) {
  if (t.is_center(v)) throw std::invalid_argument("centers cannot be reparented");
  const int n = t.size();
  const int lv = t.level[v];
  for (int u = 0; u < n; ++u) {
    if (u == v || u == t.parent[v]) continue;
    if (t.level[u] != lv - 1) continue;
    out.push_back({MoveKind::SameLevelParentChange, v, u,
                   detail::reparent_delta(t, inst, scan, v, u)});
  }
}

inline std::vector<Move> same_level_parent_candidates(const BoundedTree& t,
                                                      const Instance& inst, int v) {
  std::vector<Move> out;
  const TreeScan scan = TreeScan::build(t, inst);
  same_level_parent_candidates(t, inst, v, scan, out);
  return out;
}

// One move per (center, non-center) pair whose rewired tree stays within the
// level cap. Deltas come from a full scratch re-evaluation of the candidate.
inline void center_change_candidates(const BoundedTree& t, const Instance& inst,
                                     std::vector<Move>& out) {
  const int n = t.size();
  std::vector<int> parent;
  std::vector<int> level;
  std::vector<double> power(n);
  const int centers[2] = {t.root, t.second_center};
  for (int c : centers) {
    if (c < 0) continue;
    for (int v = 0; v < n; ++v) {
      if (t.is_center(v)) continue;
      parent = t.parent;
      const auto [root, second] = detail::rewire_center(t, c, v, parent);
      detail::compute_levels(parent, root, second, level);
      bool ok = true;
      for (int x = 0; x < n; ++x) {
        if (level[x] > inst.max_level()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::fill(power.begin(), power.end(), 0.0);
      for (int x = 0; x < n; ++x) {
        if (x == root) continue;
        const double cst = inst.cost(x, parent[x]);
        if (cst > power[x]) power[x] = cst;
        if (cst > power[parent[x]]) power[parent[x]] = cst;
      }
      double w = 0.0;
      for (double p : power) w += p;
      out.push_back({MoveKind::CenterChange, c, v, w - t.objective});
    }
  }
}

inline std::vector<Move> center_change_candidates(const BoundedTree& t,
                                                  const Instance& inst) {
  std::vector<Move> out;
  center_change_candidates(t, inst, out);
  return out;
}

inline TreeUndo apply_move(BoundedTree& t, const Instance& inst, const Move& m) {
  TreeUndo undo = t;
  if (m.kind == MoveKind::CenterChange)
    detail::apply_center_change(t, inst, m.vertex, m.target);
  else
    detail::apply_reparent(t, inst, m.vertex, m.target);
  return undo;
}

inline void revert_move(BoundedTree& t, TreeUndo undo) { t = std::move(undo); }

// One best-improvement step: scans every candidate of the given kind and
// applies the strictly improving move with the smallest delta, if any.
inline bool local_search_step(BoundedTree& t, const Instance& inst, MoveKind kind) {
  std::vector<Move> buf;
  Move best;
  bool have = false;
  if (kind == MoveKind::CenterChange) {
    center_change_candidates(t, inst, buf);
    for (const Move& m : buf) {
      if (!have || m.delta_w < best.delta_w) {
        best = m;
        have = true;
      }
    }
  } else {
    const TreeScan scan = TreeScan::build(t, inst);
    for (int v = 0; v < t.size(); ++v) {
      if (t.is_center(v)) continue;
      buf.clear();
      if (kind == MoveKind::LevelChange)
        level_change_candidates(t, inst, v, scan, buf);
      else
        same_level_parent_candidates(t, inst, v, scan, buf);
      for (const Move& m : buf) {
        if (!have || m.delta_w < best.delta_w) {
          best = m;
          have = true;
        }
      }
    }
  }
  if (!have || !(best.delta_w < 0.0)) return false;
  if (kind == MoveKind::CenterChange)
    detail::apply_center_change(t, inst, best.vertex, best.target);
  else
    detail::apply_reparent(t, inst, best.vertex, best.target);
  return true;
}

// Variable neighborhood descent over the three move kinds in the fixed order
// LevelChange, SameLevelParentChange, CenterChange; any improvement restarts
// from the first kind. Terminates at a local optimum of all three. The final
// recompute canonicalizes the cached objective: structurally equal trees must
// compare exactly equal, or solver stop criteria starve on rounding noise.
inline void vnd(BoundedTree& t, const Instance& inst) {
  static constexpr MoveKind kOrder[3] = {MoveKind::LevelChange,
                                         MoveKind::SameLevelParentChange,
                                         MoveKind::CenterChange};
  int l = 0;
  while (l < 3) {
    if (local_search_step(t, inst, kOrder[l]))
      l = 0;
    else
      ++l;
  }
  objective(t, inst);
}

// k random feasible detach/reattach steps. Each step draws a non-center v and
// a feasible non-descendant u uniformly; a v with no feasible u is redrawn,
// and after n consecutive dead draws the step is skipped but still counts.
inline void random_branch_reattaching(BoundedTree& t, const Instance& inst,
                                      int k, Rng& rng) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const int n = t.size();
  std::vector<int> non_centers;
  for (int v = 0; v < n; ++v) {
    if (!t.is_center(v)) non_centers.push_back(v);
  }
  if (non_centers.empty()) return;
  std::vector<int> feasible;
  for (int step = 0; step < k; ++step) {
    const TreeScan scan = TreeScan::build(t, inst);
    for (int draws = 0; draws < n; ++draws) {
      const int v = non_centers[next_index(rng, non_centers.size())];
      const int depth_below = scan.subtree_max_level[v] - t.level[v];
      feasible.clear();
      for (int u = 0; u < n; ++u) {
        if (u == v || scan.in_subtree(v, u)) continue;
        if (t.level[u] + 1 + depth_below > inst.max_level()) continue;
        feasible.push_back(u);
      }
      if (feasible.empty()) continue;  // dead draw, pick another v
      detail::apply_reparent(t, inst, v, feasible[next_index(rng, feasible.size())]);
      break;
    }
  }
  objective(t, inst);  // canonical cache, same reason as in vnd
}

}  // namespace mpbh
