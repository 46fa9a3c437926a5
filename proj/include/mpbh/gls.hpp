#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mpbh/constructive.hpp"
#include "mpbh/levels.hpp"
#include "mpbh/neighborhoods.hpp"
#include "mpbh/stop.hpp"

namespace mpbh {

struct GlsParams {
  int population_size = 75;
  int offspring_size = 40;
  double mutation_probability = 0.5;
  double local_search_probability = 0.5;
};

struct PopulationMember {
  BoundedTree tree;
  double fitness = 0.0;  // 1 / W(tree)
};

using Population = std::vector<PopulationMember>;

// Observation point for tests and instrumentation: called with the joined
// population (fittest first) at the end of each generation.
using GenerationHook = std::function<void(const Population&)>;

// Fitness-proportional pair selection: the first member from the whole
// population, the second from the remaining members. A pair never repeats a
// member, but one member may appear in many pairs.
inline std::vector<std::pair<int, int>> gls_select_pairs(const Population& pop,
                                                         int count, Rng& rng) {
  if (pop.size() < 2) throw std::invalid_argument("selection needs at least 2 members");
  std::vector<double> weights(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) weights[i] = pop[i].fitness;
  std::vector<double> rest;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(count);
  for (int p = 0; p < count; ++p) {
    const int a = static_cast<int>(sample_weighted(rng, weights));
    rest = weights;
    rest[a] = 0.0;
    const int b = static_cast<int>(sample_weighted(rng, rest));
    pairs.emplace_back(a, b);
  }
  return pairs;
}

// Level-array crossover. The zero entries come wholesale from one coin-picked
// parent; every other entry comes from an independent coin flip, and an
// inherited zero at a non-center position is bumped to 1 so the child keeps
// exactly one center (or center pair).
inline LevelArray gls_crossover(const LevelArray& a, const LevelArray& b, Rng& rng) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover needs equal-size arrays");
  const LevelArray& center_parent = next_unit(rng) < 0.5 ? a : b;
  LevelArray child;
  child.levels.assign(a.size(), 0);
  for (int i = 0; i < a.size(); ++i) {
    if (center_parent.levels[i] == 0) continue;  // center position, stays 0
    const int inherited = next_unit(rng) < 0.5 ? a.levels[i] : b.levels[i];
    child.levels[i] = inherited == 0 ? 1 : inherited;
  }
  return child;
}

// Mutation strength in [1, n / 3], drawn with probability proportional to
// 1 / k. Degenerates to 1 when the interval collapses.
inline int gls_mutation_k(int n, Rng& rng) {
  const int m = n / 3;
  if (m <= 1) return 1;
  std::vector<double> weights(m);
  for (int k = 1; k <= m; ++k) weights[k - 1] = 1.0 / k;
  return static_cast<int>(sample_weighted(rng, weights)) + 1;
}

// Genetic local search. Seeds are padded with randomized constructions up to
// the population size; each generation selects offspring_size pairs, crosses
// their level encodings, decodes, mutates with probability PM, refines by VND
// with probability PLS, and keeps the fittest population_size members of the
// union. The join is elitist, so the population best never worsens.
inline BoundedTree gls(const Instance& inst, const std::vector<BoundedTree>& seeds,
                       const GlsParams& params, Rng& rng, StopTracker tracker,
                       const GenerationHook& hook = {}) {
  if (seeds.empty()) throw std::invalid_argument("gls needs at least one seed tree");
  if (params.offspring_size < 1) throw std::invalid_argument("offspring_size must be >= 1");
  const int target = std::max(params.population_size, 2);

  Population pop;
  pop.reserve(target);
  for (const BoundedTree& s : seeds) {
    if (static_cast<int>(pop.size()) == target) break;
    BoundedTree t = s;
    objective(t, inst);
    if (!is_feasible(t, inst)) throw std::invalid_argument("infeasible seed tree");
    pop.push_back({std::move(t), 0.0});
  }
  while (static_cast<int>(pop.size()) < target)
    pop.push_back({randomized_construct(inst, rng), 0.0});
  for (auto& m : pop) m.fitness = 1.0 / m.tree.objective;

  const auto fitter = [](const PopulationMember& x, const PopulationMember& y) {
    return x.tree.objective < y.tree.objective;
  };
  BoundedTree best = std::min_element(pop.begin(), pop.end(), fitter)->tree;
  tracker.reset(best.objective);

  const int n = inst.size();
  for (;;) {
    const auto pairs = gls_select_pairs(pop, params.offspring_size, rng);
    Population offspring;
    offspring.reserve(pairs.size());
    for (const auto& [ia, ib] : pairs) {
      const LevelArray levels = gls_crossover(encode_levels(pop[ia].tree),
                                              encode_levels(pop[ib].tree), rng);
      BoundedTree child = decode_levels(levels, inst);
      if (next_unit(rng) < params.mutation_probability)
        random_branch_reattaching(child, inst, gls_mutation_k(n, rng), rng);
      if (next_unit(rng) < params.local_search_probability) vnd(child, inst);
      const double w = child.objective;
      offspring.push_back({std::move(child), 1.0 / w});
    }
    for (auto& m : offspring) pop.push_back(std::move(m));
    std::stable_sort(pop.begin(), pop.end(), fitter);
    pop.resize(target);
    if (hook) hook(pop);
    if (pop.front().tree.objective < best.objective) best = pop.front().tree;
    if (tracker.check(best.objective)) return best;
  }
}

}  // namespace mpbh
