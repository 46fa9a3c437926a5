#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace mpbh {

// Single RNG type for the whole library. The mt19937_64 output sequence is
// fixed by the standard, but the std:: distributions are not, so every draw
// goes through the helpers below and stays reproducible across toolchains.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// Uniform double in [0, 1), 53-bit resolution.
inline double next_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
inline std::size_t next_index(Rng& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t reject_above = max - (max % b + 1) % b;
  std::uint64_t x = rng();
  while (x > reject_above) x = rng();
  return static_cast<std::size_t>(x % b);
}

// Index drawn proportionally to non-negative weights; at least one must be
// positive.
inline std::size_t sample_weighted(Rng& rng, const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double u = next_unit(rng) * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;  // u landed on the rounding tail
}

// Fisher-Yates; std::shuffle is implementation-defined, this is not.
template <typename T>
void shuffle(Rng& rng, std::vector<T>& values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[next_index(rng, i)]);
  }
}

}  // namespace mpbh
