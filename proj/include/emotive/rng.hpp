#pragma once

#include <cstdint>

namespace emotive {

/// SplitMix64. Chosen because the sequence is trivial to reproduce in any
/// language, which keeps seeded trial logs comparable across implementations.
class Rng64 {
 public:
  constexpr explicit Rng64(std::uint64_t seed = 0) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4B7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Integer in [lo, hi] via modulo reduction (bias below 2^-62 for small ranges).
  constexpr int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
  }

  constexpr std::uint64_t state() const { return state_; }

  constexpr bool operator==(const Rng64&) const = default;

 private:
  std::uint64_t state_;
};

}  // namespace emotive
