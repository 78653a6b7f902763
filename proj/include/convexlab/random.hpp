#pragma once

#include <cstdint>

namespace convexlab {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based stream: draw i of stream `seed` is a pure function of (seed, i),
// so any shard of a sample range reproduces the serial sequence.
constexpr std::uint64_t counter_u64(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Uniform double in [0, 1) with 53 random bits.
constexpr double counter_unit(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(counter_u64(seed, index) >> 11) * 0x1.0p-53;
}

class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t start = 0) : seed_(seed), next_(start) {}

  constexpr std::uint64_t next_u64() { return counter_u64(seed_, next_++); }
  constexpr double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], unbiased by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // Independent child stream, e.g. one per test case.
  constexpr CounterRng fork(std::uint64_t stream) const { return CounterRng(mix64(seed_ ^ mix64(stream + 0x51ED2701ULL))); }

  constexpr std::uint64_t seed() const { return seed_; }
  constexpr std::uint64_t position() const { return next_; }

 private:
  std::uint64_t seed_;
  std::uint64_t next_;
};

}  // namespace convexlab
