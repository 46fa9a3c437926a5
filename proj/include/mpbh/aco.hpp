#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mpbh/levels.hpp"
#include "mpbh/neighborhoods.hpp"
#include "mpbh/stop.hpp"

namespace mpbh {

struct AcoParams {
  int colony_size = 50;
  double rho = 0.2;  // pheromone decay coefficient
};

// Trail intensities per (vertex, level). Column 0 is the center column, so
// there are floor(D / 2) + 1 columns in total.
struct PheromoneMatrix {
  int vertex_count = 0;
  int level_count = 0;
  std::vector<double> tau;

  PheromoneMatrix() = default;
  PheromoneMatrix(int n, int levels, double fill)
      : vertex_count(n),
        level_count(levels),
        tau(static_cast<std::size_t>(n) * levels, fill) {}

  double& at(int v, int l) { return tau[static_cast<std::size_t>(v) * level_count + l]; }
  double at(int v, int l) const { return tau[static_cast<std::size_t>(v) * level_count + l]; }
};

// Every cell starts at 1 / (n * W(T0)).
inline PheromoneMatrix make_pheromone(const Instance& inst, double initial_w) {
  return PheromoneMatrix(inst.size(), inst.max_level() + 1,
                         1.0 / (inst.size() * initial_w));
}

// Samples one level array: one center (two without replacement for an odd
// bound) from column 0, then each remaining vertex's level from columns
// 1..floor(D / 2) of its own row.
inline LevelArray aco_construct_path(const PheromoneMatrix& tau, int hop_bound, Rng& rng) {
  const int n = tau.vertex_count;
  const int dhalf = tau.level_count - 1;
  const int centers = hop_bound % 2 == 1 ? 2 : 1;
  if (dhalf < 1 && n > centers)
    throw std::invalid_argument("no positive levels available for non-center vertices");

  std::vector<double> column(n);
  for (int v = 0; v < n; ++v) column[v] = tau.at(v, 0);
  LevelArray arr;
  arr.levels.assign(n, -1);
  const int c1 = static_cast<int>(sample_weighted(rng, column));
  arr.levels[c1] = 0;
  if (centers == 2) {
    column[c1] = 0.0;
    arr.levels[static_cast<int>(sample_weighted(rng, column))] = 0;
  }
  std::vector<double> row(std::max(dhalf, 0));
  for (int v = 0; v < n; ++v) {
    if (arr.levels[v] == 0) continue;
    for (int l = 1; l <= dhalf; ++l) row[l - 1] = tau.at(v, l);
    arr.levels[v] = 1 + static_cast<int>(sample_weighted(rng, row));
  }
  return arr;
}

// Reinforces each vertex's cell at its level in `best` by rho / W(best) and
// decays every other cell by (1 - rho). Positivity is preserved.
inline void aco_update(PheromoneMatrix& tau, const BoundedTree& best, double rho) {
  const double bonus = rho / best.objective;
  for (int v = 0; v < tau.vertex_count; ++v) {
    for (int l = 0; l < tau.level_count; ++l) {
      if (l == best.level[v])
        tau.at(v, l) += bonus;
      else
        tau.at(v, l) *= 1.0 - rho;
    }
  }
}

// Ant colony optimization: per iteration, colony_size paths are constructed,
// decoded and refined by VND; the global best (seeded with the initial tree,
// so the result never exceeds it) drives the pheromone update.
inline BoundedTree aco(const Instance& inst, const BoundedTree& initial,
                       const AcoParams& params, Rng& rng, StopTracker tracker) {
  if (params.colony_size < 1) throw std::invalid_argument("colony_size must be >= 1");
  if (!(params.rho > 0.0 && params.rho < 1.0))
    throw std::invalid_argument("rho must lie in (0, 1)");
  BoundedTree best = initial;
  objective(best, inst);
  if (!is_feasible(best, inst)) throw std::invalid_argument("initial tree is infeasible");
  tracker.reset(best.objective);
  PheromoneMatrix tau = make_pheromone(inst, best.objective);
  for (;;) {
    for (int ant = 0; ant < params.colony_size; ++ant) {
      BoundedTree t = decode_levels(aco_construct_path(tau, inst.hop_bound(), rng), inst);
      vnd(t, inst);
      if (t.objective < best.objective) best = std::move(t);
    }
    aco_update(tau, best, params.rho);
    if (tracker.check(best.objective)) return best;
  }
}

}  // namespace mpbh
