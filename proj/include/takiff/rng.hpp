#pragma once

#include <cstdint>

#include "takiff/rational.hpp"

namespace takiff {

// splitmix64. Used for all randomness so that output is reproducible
// across platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Per-index derived seed, so sample i is independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0xa5a5a5a5a5a5a5a5ULL + index * 0x9e3779b97f4a7c15ULL));
  return mix.next();
}

/// Vector with integer coordinates uniform in [-height, height].
inline RatVec random_int_vector(std::size_t n, long height, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RatVec v(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(rng.uniform(-height, height));
  return v;
}

}  // namespace takiff
