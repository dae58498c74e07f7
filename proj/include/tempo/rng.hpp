#pragma once

#include <cstdint>

namespace tempo {

/// Counter-based 64-bit generator (splitmix64). The i-th output is
/// mix(seed + (i+1) * 0x9E3779B97F4A7C15), so a seed fully determines
/// the trajectory and simulation results are reproducible across
/// platforms and implementations of this contract.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), top 53 bits of next().
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace tempo
