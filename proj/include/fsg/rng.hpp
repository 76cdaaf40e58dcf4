#pragma once

#include <cstdint>

namespace fsg {

/// SplitMix64. Self-contained so seeded runs are bit-identical across
/// standard libraries (std::uniform_int_distribution is not portable).
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound > 0. Rejection keeps it unbiased.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return next() & 1; }
};

constexpr uint64_t kDefaultSeed = 12345;

}  // namespace fsg
