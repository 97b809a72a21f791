#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace vstoch {

/// Small splittable pseudorandom generator built on the SplitMix64 mixer.
/// Streams derived with fork() are independent and reproducible, so every
/// sampled object can be regenerated from (seed, stream tag) alone. All
/// distributions are computed explicitly to keep output identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : origin_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 in [0,1) keeps the log finite
    double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Derives an independent generator from the original seed and a tag.
  Rng fork(std::uint64_t tag) const { return Rng(mix(origin_, tag)); }

  std::uint64_t seed() const { return origin_; }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t origin_;
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace vstoch
