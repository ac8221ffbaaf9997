#pragma once
// Deterministic 64-bit generator (splitmix64) so that sampled sessions and
// benchmarks are reproducible across platforms from a seed alone.  The
// constants below are part of the artifact's contract and are documented in
// the README; draws map to ranges by plain modulo.
#include <cstdint>

namespace bv {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, k); k must be positive and small.
  uint64_t below(uint64_t k) { return next() % k; }
};

}  // namespace bv
