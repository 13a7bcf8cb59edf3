#pragma once

#include <variant>

#include "elicit/distributions.hpp"

namespace elicit {

/// A count signal: x_hat * n successes observed out of n trials. The
/// pseudo-counts x_hat*n and (1-x_hat)*n stay real-valued; rounding is
/// deliberately not applied.
struct BinomialSignal {
  double x_hat = 0.17;  // observed proportion
  double n = 1234.0;    // sample size, >= 1
};

/// A noisy location signal drawn uniformly from
/// [truth - half_width, truth + half_width].
struct UniformSignal {
  double signal = 0.17;
  double half_width = 0.10;
};

using SignalVariant = std::variant<BinomialSignal, UniformSignal>;

enum class Direction { Up, Down, Unchanged };

/// Prior-to-posterior movement of the mean and the mode under a conjugate
/// update. `opposite` is true iff the two directions are strictly opposed.
struct UpdateReport {
  double prior_mean = 0.0;
  double prior_mode = 0.0;
  double post_mean = 0.0;
  double post_mode = 0.0;
  Direction mean_direction = Direction::Unchanged;
  Direction mode_direction = Direction::Unchanged;
  bool opposite = false;
};

/// Conjugate update: Beta(a, b) prior + binomial signal ->
/// Beta(a + x_hat n, b + (1 - x_hat) n).
BetaBelief beta_binomial_update(const BetaBelief& prior,
                                const BinomialSignal& sig);

/// Range of the posterior mean (a + x_hat n)/(a + b + n) over all priors
/// with a + b <= shape_sum_cap. The default cap of 1 reproduces the textbook
/// tight interval around x_hat, even though it is incompatible with shapes
/// above 1; the exact per-prior computation in opposite_direction() is the
/// authoritative one.
Interval posterior_mean_bounds(const BinomialSignal& sig,
                               double shape_sum_cap = 1.0);

/// Range of the posterior mode (a + x_hat n - 1)/(a + b + n - 2) over priors
/// with a + b <= shape_sum_cap. Caps above 2 restrict to shapes > 1 (where
/// the mode is defined); caps at or below 2 fall back to shapes > 0, the
/// relaxation the reference interval implicitly uses.
Interval posterior_mode_bounds(const BinomialSignal& sig,
                               double shape_sum_cap = 1.0);

/// Exact prior/posterior means and modes under the conjugate update, with
/// movement directions. Requires both prior shapes > 1 (propagates
/// UndefinedModeError otherwise).
UpdateReport opposite_direction(const BetaBelief& prior,
                                const BinomialSignal& sig);

/// Restricts a discrete prior to the closed window
/// [signal - half_width, signal + half_width] and renormalizes. Throws
/// EmptyPosteriorError if no atom survives.
DiscreteBelief uniform_window_update(const DiscreteBelief& prior,
                                     const UniformSignal& sig);

}  // namespace elicit
