#pragma once

// Counter-based deterministic random numbers: the i-th draw of a stream
// depends only on (seed, i), so sampled reports are reproducible
// bit-for-bit regardless of worker partitioning.

#include <cstdint>

namespace lamp {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t at(std::uint64_t counter) const {
    return mix64(mix64(seed) ^ counter * 0xd1342543de82ef95ULL);
  }

  // Uniform in [0, bound), bound > 0; modulo bias is negligible for the
  // bounds used here (< 2^40).
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
    return at(counter) % bound;
  }

  double unit(std::uint64_t counter) const {
    return (at(counter) >> 11) * 0x1.0p-53;
  }
};

}  // namespace lamp
