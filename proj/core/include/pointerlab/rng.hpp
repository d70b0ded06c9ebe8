#pragma once

#include <cstdint>

namespace pointerlab {

/// SplitMix64, the 64-bit mixing generator of Steele, Lea and Vigna. The
/// output sequence is fixed by the published constants, independent of
/// platform or standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in (-1, 1), zero redrawn so callers can rely on nonzero.
  double uniform_symmetric_nonzero() {
    for (;;) {
      const double u = 2.0 * uniform01() - 1.0;
      if (u != 0.0) return u;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace pointerlab
