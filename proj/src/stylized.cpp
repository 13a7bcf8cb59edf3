#include "elicit/stylized.hpp"

#include <cmath>
#include <optional>

#include "elicit/defaults.hpp"

namespace elicit {

namespace {

constexpr double kTol = 1e-12;

void check_group(const AgentGroup& g) {
  if (!(g.cost > 0.0) || !(g.cost < 1.0))
    throw InvalidArgumentError("participation cost must lie in (0,1)");
  if (!(g.report_window > 0.0))
    throw InvalidArgumentError("report window must be > 0");
  if (!(g.beliefs.min_support_gap() > g.report_window))
    throw InvalidArgumentError(
        "group beliefs must have support separated by more than the window");
}

GroupWave wave_stats(const DiscreteBelief& beliefs, const Scheme& scheme,
                     double cost) {
  GroupWave w;
  w.mean = mean(beliefs);
  w.mode = mode(beliefs);
  w.report = optimal_report(scheme, beliefs).primary_report();
  w.participates = w.mean > cost;
  return w;
}

StylizedOutcome run_with(const std::vector<AgentGroup>& groups,
                         const UniformSignal& sig,
                         const std::optional<Scheme>& override_scheme) {
  if (groups.empty()) throw InvalidArgumentError("no groups given");
  StylizedOutcome out;
  bool some_opposite = false;
  for (const AgentGroup& g : groups) {
    check_group(g);
    const Scheme scheme = override_scheme
                              ? *override_scheme
                              : Scheme(WindowScheme{g.report_window, g.reward});
    GroupOutcome res;
    res.label = g.label;
    res.prior = wave_stats(g.beliefs, scheme, g.cost);
    const DiscreteBelief post = uniform_window_update(g.beliefs, sig);
    res.posterior = wave_stats(post, scheme, g.cost);

    const int report_dir =
        res.posterior.report > res.prior.report + kTol
            ? 1
            : (res.posterior.report < res.prior.report - kTol ? -1 : 0);
    const int part_dir = static_cast<int>(res.posterior.participates) -
                         static_cast<int>(res.prior.participates);
    if (report_dir * part_dir < 0) some_opposite = true;
    out.groups.push_back(std::move(res));
  }
  out.naive_sc_verdict = some_opposite ? NaiveScVerdict::RejectsSC
                                       : NaiveScVerdict::ConsistentWithSC;
  return out;
}

}  // namespace

double participation_utility(const BeliefDistribution& beliefs, double cost) {
  if (!(cost > 0.0) || !(cost < 1.0))
    throw InvalidArgumentError("participation cost must lie in (0,1)");
  return mean(beliefs) - cost;
}

bool participation_decision(const BeliefDistribution& beliefs, double cost) {
  return participation_utility(beliefs, cost) > 0.0;
}

StylizedOutcome run_stylized(const std::vector<AgentGroup>& groups,
                             const UniformSignal& sig) {
  return run_with(groups, sig, std::nullopt);
}

StylizedOutcome run_stylized(const std::vector<AgentGroup>& groups,
                             const UniformSignal& sig, const Scheme& scheme) {
  validate(scheme);
  return run_with(groups, sig, scheme);
}

SplitOutcome control_treatment_split(const AgentGroup& group,
                                     const UniformSignal& sig) {
  check_group(group);
  const Scheme scheme = WindowScheme{group.report_window, group.reward};
  const GroupWave prior = wave_stats(group.beliefs, scheme, group.cost);
  const DiscreteBelief post_beliefs = uniform_window_update(group.beliefs, sig);
  const GroupWave posterior = wave_stats(post_beliefs, scheme, group.cost);

  SplitOutcome out;
  out.control = {group.label + "/control", prior, prior};
  out.treated = {group.label + "/treated", prior, posterior};
  return out;
}

AgentGroup default_group1() {
  return {"b1",
          DiscreteBelief({{0.00, 0.30},
                          {0.12, 0.10},
                          {0.17, 0.15},
                          {0.22, 0.10},
                          {0.30, 0.35}}),
          defaults::kParticipationCost,
          defaults::kBonus,
          defaults::kWindowHalfWidth};
}

AgentGroup default_group2() {
  return {"b2",
          DiscreteBelief(
              {{0.05, 0.35}, {0.08, 0.20}, {0.12, 0.20}, {0.17, 0.25}}),
          defaults::kParticipationCost,
          defaults::kBonus,
          defaults::kWindowHalfWidth};
}

std::vector<AgentGroup> default_groups() {
  return {default_group1(), default_group2()};
}

UniformSignal default_signal() {
  return {defaults::kInterventionShare, defaults::kSignalHalfWidth};
}

}  // namespace elicit
