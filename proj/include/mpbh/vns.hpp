#pragma once

#include <stdexcept>

#include "mpbh/neighborhoods.hpp"
#include "mpbh/stop.hpp"

namespace mpbh {

// Variable neighborhood search: shaking of growing strength k followed by
// VND, restarting at k = 1 on every improvement. One tracker iteration is a
// full k-sweep ending with k > k_max. The incumbent only ever improves, so
// the result never exceeds the initial objective.
inline BoundedTree vns(const Instance& inst, const BoundedTree& initial,
                       int k_max, Rng& rng, StopTracker tracker) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  BoundedTree best = initial;
  objective(best, inst);
  if (!is_feasible(best, inst)) throw std::invalid_argument("initial tree is infeasible");
  tracker.reset(best.objective);
  BoundedTree work;
  for (;;) {
    for (int k = 1; k <= k_max;) {
      work = best;
      random_branch_reattaching(work, inst, k, rng);
      vnd(work, inst);
      if (work.objective < best.objective) {
        best = work;
        k = 1;
      } else {
        ++k;
      }
    }
    if (tracker.check(best.objective)) return best;
  }
}

}  // namespace mpbh
