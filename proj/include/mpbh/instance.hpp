#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mpbh {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Complete Euclidean instance: the point set, the hop-diameter bound D, and
// the symmetric power-cost matrix cost[i][j] = |p_i - p_j|^s. The default
// exponent s = 2 gives plain squared distances.
class Instance {
 public:
  explicit Instance(std::vector<Point> points, int hop_bound, double exponent = 2.0)
      : points_(std::move(points)),
        n_(static_cast<int>(points_.size())),
        hop_bound_(hop_bound),
        cost_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ : 0), 0.0) {
    if (n_ < 2) throw std::invalid_argument("instance needs at least 2 points");
    if (hop_bound_ < 1) throw std::invalid_argument("hop bound must be >= 1");
    for (const Point& p : points_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::invalid_argument("non-finite coordinate");
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const double dx = points_[i].x - points_[j].x;
        const double dy = points_[i].y - points_[j].y;
        const double d2 = dx * dx + dy * dy;
        const double c = exponent == 2.0 ? d2 : std::pow(d2, exponent / 2.0);
        cost_[idx(i, j)] = c;
        cost_[idx(j, i)] = c;
      }
    }
  }

  int size() const { return n_; }
  int hop_bound() const { return hop_bound_; }
  // Deepest admissible vertex level, floor(D / 2).
  int max_level() const { return hop_bound_ / 2; }
  // An odd bound uses a root plus an adjacent second center.
  bool two_centers() const { return hop_bound_ % 2 == 1; }
  double cost(int i, int j) const { return cost_[idx(i, j)]; }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  std::vector<Point> points_;
  int n_;
  int hop_bound_;
  std::vector<double> cost_;
};

inline Instance build_instance(std::vector<Point> points, int hop_bound) {
  return Instance(std::move(points), hop_bound);
}

}  // namespace mpbh
