#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ugbs/constants.hpp"

namespace ugbs {

// All randomness goes through mt19937_64 plus the mappings below. The
// standard library distributions are implementation-defined, so seeded
// fixtures frozen in the tests would not reproduce across toolchains;
// these mappings are fully specified and portable.

using Rng = std::mt19937_64;

/// SplitMix64 mix step; used to derive independent per-task seeds from a
/// master seed without correlated streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform integer in [0, bound), unbiased via rejection. bound >= 1.
inline std::uint64_t bounded_uniform(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

/// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Standard normal via Box-Muller (one value per call, mate discarded).
inline double gaussian(Rng& rng) {
  double u1;
  do {
    u1 = uniform_unit(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace ugbs
