#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace qcover {

/// All seeded randomness in the library runs on std::mt19937_64, whose output
/// sequence is fixed by the C++ standard. The standard distributions are not
/// portable, so bounded draws use rejection sampling on the raw output.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n); n must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

/// Uniform integer in [lo, hi]; requires lo <= hi.
inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace qcover
