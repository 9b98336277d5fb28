#pragma once

#include <cstdint>

namespace meannorm {

/// SplitMix64 generator. The sequence is a pure function of the seed, so
/// every random trial can be reproduced bit-for-bit from the CLI seed
/// regardless of platform or standard library.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace meannorm
