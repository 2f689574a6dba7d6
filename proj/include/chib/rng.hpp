#pragma once

#include <cstdint>

namespace chib {

/// SplitMix64. The state advances by 0x9E3779B97F4A7C15 per draw and the
/// output is the state passed through
///
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
///
/// uniform() takes the top 53 bits of a draw and scales by 2^-53, so it lies
/// in [0, 1). Streams are bit-identical on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Seed of the `index`-th independent substream of `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed ^ (index * 0xD1B54A32D192ED03ULL)).next();
  }

private:
  std::uint64_t state_;
};

} // namespace chib
