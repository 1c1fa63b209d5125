#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cdc {

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
/// unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, n) by rejection, also platform independent.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

inline double metropolis_probability(double delta, double beta) {
  return delta <= 0.0 ? 1.0 : std::exp(-beta * delta);
}

/// Accepts with probability min(1, exp(-beta * delta)); consumes one draw
/// only when delta > 0.
inline bool metropolis_accept(double delta, double beta, std::mt19937_64& rng) {
  if (delta <= 0.0) return true;
  return uniform01(rng) < std::exp(-beta * delta);
}

}  // namespace cdc
