#pragma once

#include <cstdint>

#include "hnlab/scalar.hpp"

namespace hnlab {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by 0x9E3779B97F4A7C15;
/// output is the standard mix of the new state:
///
///   z = (state += 0x9E3779B97F4A7C15)
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Bounded draws use rejection: values >= 2^64 - (2^64 mod n) are discarded,
/// then the result is v mod n. Any implementation following these two rules
/// reproduces hnlab sample streams bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t limit = -n % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t v = next();
      if (v >= limit) return v % n;
    }
  }

  /// Uniform integer in [lo, hi].
  long between(long lo, long hi) noexcept {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform element of F_p, or a uniform integer in [-bound, bound] over Q.
  Scalar scalar(Field field, long bound) noexcept {
    if (field.is_rational()) return field.from_int(between(-bound, bound));
    return field.from_int(static_cast<long>(below(field.characteristic())));
  }

  /// Like scalar() but never zero.
  Scalar nonzero_scalar(Field field, long bound) noexcept {
    for (;;) {
      Scalar s = scalar(field, bound);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace hnlab
