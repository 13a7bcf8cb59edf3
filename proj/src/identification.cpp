#include "elicit/identification.hpp"

#include <cmath>

#include "elicit/defaults.hpp"
#include "elicit/rng.hpp"
#include "elicit/stylized.hpp"

namespace elicit {

namespace {

constexpr std::uint64_t kTreatmentDomain = 0x7452;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BeliefDistribution update_beliefs(const BeliefDistribution& prior,
                                  const SignalVariant& signal) {
  return std::visit(
      overloaded{
          [&](const BetaBelief& b, const BinomialSignal& s) {
            return BeliefDistribution(beta_binomial_update(b, s));
          },
          [&](const DiscreteBelief& d, const UniformSignal& s) {
            return BeliefDistribution(uniform_window_update(d, s));
          },
          [&](const auto&, const auto&) -> BeliefDistribution {
            throw InvalidArgumentError(
                "unsupported prior/signal combination: beta priors take "
                "binomial signals, discrete priors take uniform signals");
          },
      },
      prior, signal);
}

struct WaveStats {
  double report = 0.0;
  double mean_belief = 0.0;
};

struct AgentStats {
  WaveStats prior;
  WaveStats posterior;  // after treatment
};

AgentStats stats_for(const BeliefDistribution& prior, const Scheme& scheme,
                     const SignalVariant& signal) {
  AgentStats st;
  st.prior.report = optimal_report(scheme, prior).primary_report();
  st.prior.mean_belief = mean(prior);
  const BeliefDistribution post = update_beliefs(prior, signal);
  st.posterior.report = optimal_report(scheme, post).primary_report();
  st.posterior.mean_belief = mean(post);
  return st;
}

void check_config(const ExperimentConfig& cfg) {
  validate(cfg.scheme);
  if (cfg.agents < 10)
    throw InvalidArgumentError("need at least 10 agents");
  if (!(cfg.treated_share >= 0.0) || !(cfg.treated_share <= 1.0))
    throw InvalidArgumentError("treated share must lie in [0,1]");
  if (!(cfg.cost > 0.0) || !(cfg.cost < 1.0))
    throw InvalidArgumentError("participation cost must lie in (0,1)");
}

}  // namespace

PanelData simulate_experiment(const ExperimentConfig& cfg) {
  check_config(cfg);

  PanelData panel;
  panel.rows.reserve(cfg.agents);

  const auto emit = [&](std::size_t id, const AgentStats& st) {
    AgentRow row;
    row.id = id;
    row.treated =
        substream(cfg.seed, id, kTreatmentDomain).next_double() <
        cfg.treated_share;
    row.prior_report = st.prior.report;
    row.prior_mean = st.prior.mean_belief;
    if (row.treated) {
      row.post_report = st.posterior.report;
      row.post_mean = st.posterior.mean_belief;
    } else {
      row.post_report = st.prior.report;
      row.post_mean = st.prior.mean_belief;
    }
    row.participates = row.post_mean > cfg.cost;
    panel.rows.push_back(row);
  };

  std::visit(
      overloaded{
          [&](const HyperParams& hyper) {
            const auto priors =
                sample_population(hyper, cfg.agents, cfg.seed);
            for (std::size_t i = 0; i < cfg.agents; ++i)
              emit(i, stats_for(priors[i], cfg.scheme, cfg.signal));
          },
          [&](const std::vector<BeliefDistribution>& list) {
            if (list.empty())
              throw InvalidArgumentError("population list is empty");
            // Agents cycle through the list, so stats are computed once per
            // distinct prior.
            std::vector<AgentStats> cache;
            cache.reserve(list.size());
            for (const auto& prior : list)
              cache.push_back(stats_for(prior, cfg.scheme, cfg.signal));
            for (std::size_t i = 0; i < cfg.agents; ++i)
              emit(i, cache[i % list.size()]);
          },
      },
      cfg.population);

  return panel;
}

RegressionResult estimate(const PanelData& panel, Regressor regressor) {
  const auto& rows = panel.rows;
  if (rows.empty()) throw InvalidArgumentError("empty panel");

  const auto x_of = [&](const AgentRow& r) {
    return regressor == Regressor::PostReport
               ? r.post_report
               : r.post_report - r.prior_report;
  };

  const double n = static_cast<double>(rows.size());
  double x_bar = 0.0, y_bar = 0.0;
  for (const AgentRow& r : rows) {
    x_bar += x_of(r);
    y_bar += r.participates ? 1.0 : 0.0;
  }
  x_bar /= n;
  y_bar /= n;

  double sxx = 0.0, sxy = 0.0;
  for (const AgentRow& r : rows) {
    const double dx = x_of(r) - x_bar;
    sxx += dx * dx;
    sxy += dx * ((r.participates ? 1.0 : 0.0) - y_bar);
  }
  if (!(sxx > 0.0))
    throw ZeroVarianceError("regressor has zero variance");

  RegressionResult res;
  res.delta2 = sxy / sxx;
  res.delta1 = y_bar - res.delta2 * x_bar;
  res.n_obs = rows.size();

  // HC0 robust variance for the slope.
  double meat = 0.0;
  for (const AgentRow& r : rows) {
    const double dx = x_of(r) - x_bar;
    const double resid =
        (r.participates ? 1.0 : 0.0) - res.delta1 - res.delta2 * x_of(r);
    meat += dx * dx * resid * resid;
  }
  res.se2 = std::sqrt(meat) / sxx;
  return res;
}

SignFlipResult sign_flip_demo(const ExperimentConfig& cfg) {
  check_config(cfg);

  ExperimentConfig window_cfg = cfg;
  if (!std::holds_alternative<WindowScheme>(cfg.scheme))
    window_cfg.scheme =
        WindowScheme{defaults::kWindowHalfWidth, defaults::kBonus};
  ExperimentConfig quad_cfg = cfg;
  quad_cfg.scheme = QuadraticScheme{1.0, 2.0};

  SignFlipResult out;
  out.window =
      estimate(simulate_experiment(window_cfg), Regressor::ReportChange);
  out.quadratic =
      estimate(simulate_experiment(quad_cfg), Regressor::PostReport);
  return out;
}

ExperimentConfig stylized_experiment_config(std::uint64_t seed,
                                            std::size_t agents) {
  ExperimentConfig cfg;
  cfg.population = std::vector<BeliefDistribution>{
      default_group1().beliefs, default_group2().beliefs};
  cfg.scheme = WindowScheme{defaults::kWindowHalfWidth, defaults::kBonus};
  cfg.cost = defaults::kParticipationCost;
  cfg.treated_share = 0.5;
  cfg.signal = default_signal();
  cfg.agents = agents;
  cfg.seed = seed;
  return cfg;
}

}  // namespace elicit
