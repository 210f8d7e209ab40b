#pragma once

#include <cstdint>

#include "agelab/scalar.hpp"

namespace agelab {

/// splitmix64: seedable, portable, stateless enough to reproduce suites
/// bit-for-bit across runs and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; the tiny modulo bias is irrelevant here,
  /// and keeping the mapping trivial keeps it portable.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  /// Small nonzero rational: numerator in [-9,9]\{0}, denominator in [1,4].
  Scalar small_scalar() {
    std::int64_t num = range(1, 9);
    if (next_u64() & 1) num = -num;
    return Scalar(num, range(1, 4));
  }

  /// Small rational, zero allowed.
  Scalar small_scalar_or_zero() {
    if (next_u64() % 4 == 0) return Scalar(0);
    return small_scalar();
  }

  /// Derives an independent stream (useful for per-suite determinism).
  SplitMix64 fork() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace agelab
