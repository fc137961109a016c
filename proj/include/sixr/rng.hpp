#pragma once

#include <cstdint>

namespace sixr {

/// Counter-based SplitMix64 stream. Draw i is a pure function of (seed, i),
/// so results are identical across platforms and independent of call order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t at(std::uint64_t counter) const {
    return mix(seed_ + counter * 0x9E3779B97F4A7C15ull);
  }

  /// Uniform in [0, 1).
  double uniform_at(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  double uniform_at(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform_at(counter);
  }

  /// Sequential convenience interface.
  std::uint64_t next() { return at(counter_++); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  /// Derive an independent stream (e.g. per attempt or per sample).
  SplitMix64 fork(std::uint64_t salt) const { return SplitMix64(mix(seed_ ^ mix(salt))); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace sixr
