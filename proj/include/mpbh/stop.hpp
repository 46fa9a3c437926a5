#pragma once

#include <limits>
#include <stdexcept>

namespace mpbh {

// Stops a solver once the best objective has gone `patience` consecutive
// checks without a strict improvement. Equal values count as stale.
struct StopTracker {
  double best_w = std::numeric_limits<double>::infinity();
  int stale_iterations = 0;
  int patience = 3;

  explicit StopTracker(int patience_ = 3) : patience(patience_) {
    if (patience_ < 1) throw std::invalid_argument("patience must be >= 1");
  }

  void reset(double w) {
    best_w = w;
    stale_iterations = 0;
  }

  bool check(double w) {
    if (w < best_w) {
      best_w = w;
      stale_iterations = 0;
    } else {
      ++stale_iterations;
    }
    return stale_iterations >= patience;
  }
};

inline bool stop_check(StopTracker& tracker, double current_best_w) {
  return tracker.check(current_best_w);
}

}  // namespace mpbh
