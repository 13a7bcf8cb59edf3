#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "elicit/distributions.hpp"
#include "elicit/updating.hpp"

namespace elicit {

/// Hyperparameters of the belief population: alpha_i - 1 ~ chi^2(ell) and
/// beta_i - 1 ~ chi^2(q), independent across subjects.
struct HyperParams {
  double ell = 1.0;
  double q = 3.0;
};

/// Reported modes, one per subject. Reports exactly 0 or 1 are clamped to
/// [1e-6, 1 - 1e-6] at load time; clamped_count records how many were.
struct ModeDataset {
  std::vector<double> reports;
  std::size_t clamped_count = 0;
};

/// Maximum-likelihood fit of Beta(ell/2, q/2) to a mode dataset.
struct FitResult {
  double a_hat = 0.0;  // estimate of ell/2
  double b_hat = 0.0;  // estimate of q/2
  Interval ci_a;       // 95% interval
  Interval ci_b;
  double loglik = 0.0;
  int ell_rounded = 0;  // ceil(2 a_hat)
  int q_rounded = 0;    // ceil(2 b_hat)
};

/// Share of a simulated population whose mean and mode straddle the
/// intervention value.
struct QuantifyResult {
  double share = 0.0;
  std::size_t draws = 0;
  std::uint64_t seed = 0;
  double x_hat = 0.0;
  double n = 0.0;
  double delta = 0.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Draws `count` Beta beliefs with shapes 1 + chi^2(ell), 1 + chi^2(q).
/// Deterministic given the seed: draw i depends only on (seed, i).
std::vector<BetaBelief> sample_population(const HyperParams& hyper,
                                          std::size_t count,
                                          std::uint64_t seed);

/// The distribution of modes induced by the hyperparameters:
/// (alpha-1)/(alpha-1 + beta-1) ~ Beta(ell/2, q/2).
BetaBelief mode_distribution(const HyperParams& hyper);

/// Fits Beta shapes to the reports by maximum likelihood (Nelder-Mead from a
/// method-of-moments start), with confidence intervals from the inverse
/// observed information. Throws DegenerateDataError when all reports are
/// equal and NonConvergenceError past 10^4 iterations.
FitResult fit_mle(const ModeDataset& data);

/// Monte Carlo share of drawn priors whose mean and mode lie on strictly
/// opposite sides of sig.x_hat and (when require_mass_condition) whose mode
/// window carries at least as much mass as the mean window.
QuantifyResult quantify_opposite_share(const HyperParams& hyper,
                                       const BinomialSignal& sig, double delta,
                                       std::size_t draws, std::uint64_t seed,
                                       bool require_mass_condition = true);

/// Mean and variance of the induced mode distribution Beta(ell/2, q/2).
Moments model_fit_moments(const HyperParams& hyper);

/// Reads a dataset from CSV with header `report`, one value per line,
/// applying the boundary clamping policy.
ModeDataset load_mode_dataset_csv(std::istream& in);

}  // namespace elicit
