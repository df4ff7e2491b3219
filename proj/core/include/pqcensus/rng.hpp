#pragma once

#include <cstdint>
#include <random>

namespace pqc {

// All randomized operations take an explicit seed and must reproduce
// bit-identically across platforms, so sampling goes through this helper
// instead of std::uniform_int_distribution (whose output is
// implementation-defined).
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  // rejection sampling; unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace pqc
