#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "elicit/hierarchical.hpp"
#include "elicit/schemes.hpp"
#include "elicit/updating.hpp"

namespace elicit {

/// A synthetic two-wave belief experiment: a population of priors, an
/// elicitation scheme, an information signal shown to the treated share, and
/// a participation cost threshold.
struct ExperimentConfig {
  std::variant<HyperParams, std::vector<BeliefDistribution>> population;
  Scheme scheme = WindowScheme{};
  double cost = 0.165;
  double treated_share = 0.5;  // in [0,1]
  SignalVariant signal = BinomialSignal{};
  std::size_t agents = 40;
  std::uint64_t seed = 0;
};

struct AgentRow {
  std::size_t id = 0;
  bool treated = false;
  double prior_report = 0.0;
  double post_report = 0.0;
  double prior_mean = 0.0;
  double post_mean = 0.0;
  bool participates = false;
};

struct PanelData {
  std::vector<AgentRow> rows;
};

enum class Regressor { PostReport, ReportChange };

struct RegressionResult {
  double delta1 = 0.0;  // intercept
  double delta2 = 0.0;  // slope on the belief regressor
  double se2 = 0.0;     // heteroskedasticity-robust s.e. of delta2
  std::size_t n_obs = 0;
};

/// Simulates the experiment: draws priors, treats a random subset, updates
/// treated beliefs on the signal, computes both waves' reports under the
/// scheme and the participation decision on the final mean belief. Fully
/// deterministic given (seed, config); untreated agents keep their prior in
/// wave two.
PanelData simulate_experiment(const ExperimentConfig& cfg);

/// OLS of participation (0/1) on the chosen regressor with an intercept.
/// Throws ZeroVarianceError when the regressor is constant.
RegressionResult estimate(const PanelData& panel, Regressor regressor);

/// Both scheme variants on the same draw: the window panel estimated on
/// report changes (the updating-direction reading) and the quadratic panel
/// estimated on report levels (the structural equation's regressor).
struct SignFlipResult {
  RegressionResult window;
  RegressionResult quadratic;
};

SignFlipResult sign_flip_demo(const ExperimentConfig& cfg);

/// Config for the benchmark two-group population under the default window
/// scheme and uniform signal.
ExperimentConfig stylized_experiment_config(std::uint64_t seed,
                                            std::size_t agents = 40);

}  // namespace elicit
