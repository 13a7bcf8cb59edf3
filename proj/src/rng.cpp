#include "elicit/rng.hpp"

#include <cmath>

#include "elicit/errors.hpp"

namespace elicit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

SplitMix64 substream(std::uint64_t seed, std::uint64_t index,
                     std::uint64_t domain) {
  std::uint64_t key = seed;
  key = mix64(key + 0x9E3779B97F4A7C15ULL * (index + 1));
  key = mix64(key + 0xD1B54A32D192ED03ULL * (domain + 1));
  return SplitMix64(key);
}

double draw_normal(SplitMix64& rng) {
  const double u1 = rng.next_open();
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double draw_gamma(SplitMix64& rng, double shape) {
  if (!(shape > 0.0)) throw InvalidArgumentError("gamma shape must be > 0");
  if (shape < 1.0) {
    // Boost a shape+1 draw back down (Marsaglia-Tsang, eq. for a < 1).
    const double u = rng.next_open();
    return draw_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = draw_normal(rng);
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.next_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double draw_chi_squared(SplitMix64& rng, double dof) {
  return 2.0 * draw_gamma(rng, 0.5 * dof);
}

double draw_beta(SplitMix64& rng, double a, double b) {
  const double x = draw_gamma(rng, a);
  const double y = draw_gamma(rng, b);
  return x / (x + y);
}

}  // namespace elicit
