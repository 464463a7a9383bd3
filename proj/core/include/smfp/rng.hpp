#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace smfp {

// All randomized operations in the library draw from this engine, seeded
// explicitly by the caller. The derived quantities below are hand-rolled
// because std::uniform_*_distribution and std::shuffle are allowed to differ
// between standard library implementations, and reproducibility across
// toolchains is part of the contract.
using Rng = std::mt19937_64;

inline std::uint64_t rand_u64(Rng& rng) { return rng(); }

// Uniform integer in [0, n). Rejection sampling keeps the draw unbiased.
inline std::size_t rand_index(Rng& rng, std::size_t n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw = rng();
  while (draw >= limit) {
    draw = rng();
  }
  return static_cast<std::size_t>(draw % span);
}

// Uniform double in [0, 1) with 53 bits of mantissa.
inline double rand_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

// Gaussian draw via Box-Muller. One fresh pair of uniforms per call (no
// cached second value), so the consumed stream length is predictable.
inline double rand_gaussian(Rng& rng, double mean, double stddev) {
  double u1 = rand_unit(rng);
  while (u1 <= 0.0) {
    u1 = rand_unit(rng);
  }
  const double u2 = rand_unit(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 6.283185307179586476925286766559 * u2;
  return mean + stddev * radius * std::cos(angle);
}

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle_vec(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = rand_index(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace smfp
