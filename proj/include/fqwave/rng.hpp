// rng.hpp - SplitMix64, a tiny seeded generator with a stable cross-platform
// sequence; used for every randomized demo and sampling check so reports are
// reproducible from (seed, trials).
#pragma once

#include <cstdint>

namespace fqwave {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be positive. Modulo bias is irrelevant at the
  /// desk-scale ranges used here.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  /// Uniform double in [-1, 1).
  double next_signed_unit() {
    return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
  }
};

}  // namespace fqwave
