#pragma once

#include <cstdint>
#include <random>

namespace padplace {

/// SplitMix64 finalizer. Used to derive independent sub-stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of sub-stream `stream` under `seed`: splitmix64(seed ^ splitmix64(stream)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Portable random source: mt19937_64 with hand-written transforms, so the
/// same seed yields the same doubles on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller (one draw per call, no caching).
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace padplace
