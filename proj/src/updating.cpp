#include "elicit/updating.hpp"

#include <cmath>

namespace elicit {

namespace {

constexpr double kTol = 1e-12;
constexpr double kDirTol = 1e-14;

void check_signal(const BinomialSignal& sig) {
  if (!(sig.x_hat >= 0.0) || !(sig.x_hat <= 1.0))
    throw InvalidArgumentError("observed proportion must lie in [0,1]");
  if (!(sig.n >= 1.0))
    throw InvalidArgumentError("signal sample size must be >= 1");
}

Direction direction_of(double before, double after) {
  if (after > before + kDirTol) return Direction::Up;
  if (after < before - kDirTol) return Direction::Down;
  return Direction::Unchanged;
}

}  // namespace

BetaBelief beta_binomial_update(const BetaBelief& prior,
                                const BinomialSignal& sig) {
  check_signal(sig);
  const double successes = sig.x_hat * sig.n;
  return BetaBelief(prior.alpha() + successes,
                    prior.beta() + (sig.n - successes));
}

Interval posterior_mean_bounds(const BinomialSignal& sig,
                               double shape_sum_cap) {
  check_signal(sig);
  if (!(shape_sum_cap > 0.0))
    throw InvalidArgumentError("shape-sum cap must be > 0");
  const double s = sig.x_hat * sig.n;
  const double den = sig.n + shape_sum_cap;
  return {s / den, (shape_sum_cap + s) / den};
}

Interval posterior_mode_bounds(const BinomialSignal& sig,
                               double shape_sum_cap) {
  check_signal(sig);
  if (!(shape_sum_cap > 0.0))
    throw InvalidArgumentError("shape-sum cap must be > 0");
  const double s = sig.x_hat * sig.n;
  const double den = sig.n + shape_sum_cap - 2.0;
  if (!(den > 0.0))
    throw InvalidArgumentError("mode bounds need n + cap > 2");
  if (shape_sum_cap > 2.0) {
    // Honest region: shapes > 1, so alpha - 1 ranges over (0, cap - 2).
    return {s / den, (shape_sum_cap - 2.0 + s) / den};
  }
  // Caps <= 2 are infeasible under shapes > 1; relax to shapes > 0, which is
  // what the reference interval does.
  return {(s - 1.0) / den, (s - 1.0 + shape_sum_cap) / den};
}

UpdateReport opposite_direction(const BetaBelief& prior,
                                const BinomialSignal& sig) {
  const BetaBelief post = beta_binomial_update(prior, sig);
  UpdateReport rep;
  rep.prior_mean = mean(prior);
  rep.prior_mode = mode(prior);
  rep.post_mean = mean(post);
  rep.post_mode = mode(post);
  rep.mean_direction = direction_of(rep.prior_mean, rep.post_mean);
  rep.mode_direction = direction_of(rep.prior_mode, rep.post_mode);
  rep.opposite = (rep.mean_direction == Direction::Up &&
                  rep.mode_direction == Direction::Down) ||
                 (rep.mean_direction == Direction::Down &&
                  rep.mode_direction == Direction::Up);
  return rep;
}

DiscreteBelief uniform_window_update(const DiscreteBelief& prior,
                                     const UniformSignal& sig) {
  if (!(sig.half_width > 0.0))
    throw InvalidArgumentError("signal half-width must be > 0");
  const double lo = sig.signal - sig.half_width;
  const double hi = sig.signal + sig.half_width;
  std::vector<Atom> kept;
  double total = 0.0;
  for (const Atom& a : prior.atoms()) {
    if (a.value >= lo - kTol && a.value <= hi + kTol) {
      kept.push_back(a);
      total += a.prob;
    }
  }
  if (kept.empty())
    throw EmptyPosteriorError("no prior atom lies inside the signal window");
  for (Atom& a : kept) a.prob /= total;
  return DiscreteBelief(std::move(kept));
}

}  // namespace elicit
