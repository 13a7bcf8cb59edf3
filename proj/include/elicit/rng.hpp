#pragma once

#include <cstdint>

namespace elicit {

/// SplitMix64 generator. Small, fast and fully deterministic across
/// platforms, which std::~ distributions are not. Every randomized routine
/// in the library derives its draws from (seed, index) substreams of this
/// generator, so results are identical regardless of scheduling.
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

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1); safe as a log() argument.
  double next_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Hashes a stream key into an initial SplitMix64 state.
SplitMix64 substream(std::uint64_t seed, std::uint64_t index,
                     std::uint64_t domain = 0);

/// Standard normal via Box-Muller.
double draw_normal(SplitMix64& rng);

/// Gamma(shape, scale 1) via Marsaglia-Tsang; fractional shapes supported.
double draw_gamma(SplitMix64& rng, double shape);

/// Chi-squared with (possibly fractional) degrees of freedom.
double draw_chi_squared(SplitMix64& rng, double dof);

/// Beta(a, b) as a ratio of gamma draws.
double draw_beta(SplitMix64& rng, double a, double b);

}  // namespace elicit
