#pragma once

#include <string>
#include <vector>

#include "elicit/schemes.hpp"
#include "elicit/updating.hpp"

namespace elicit {

/// One belief group of the two-group protest example: exogenous discrete
/// beliefs over others' attendance, a participation cost threshold, and the
/// window reward it reports under.
struct AgentGroup {
  std::string label;
  DiscreteBelief beliefs;
  double cost = 0.165;          // attend iff mean belief exceeds this
  double reward = 10.0;         // window bonus w
  double report_window = 0.02;  // window half-width
};

/// Belief summary for one wave: what the subject believes, what they report,
/// and whether they attend.
struct GroupWave {
  double mean = 0.0;
  double mode = 0.0;
  double report = 0.0;
  bool participates = false;
};

struct GroupOutcome {
  std::string label;
  GroupWave prior;
  GroupWave posterior;
};

/// What an observer who reads reports as mean beliefs would conclude about
/// strategic complementarity.
enum class NaiveScVerdict { RejectsSC, ConsistentWithSC };

struct StylizedOutcome {
  std::vector<GroupOutcome> groups;
  NaiveScVerdict naive_sc_verdict = NaiveScVerdict::ConsistentWithSC;
};

/// Expected utility of attending minus staying home: mean belief - cost.
double participation_utility(const BeliefDistribution& beliefs, double cost);

/// Attend iff mean belief strictly exceeds the cost (ties stay home).
bool participation_decision(const BeliefDistribution& beliefs, double cost);

/// Runs the two-wave example: prior stats, posterior stats after the uniform
/// window signal, reports under each group's window scheme, and the naive
/// verdict. The verdict is RejectsSC iff some group's report moved strictly
/// opposite to its participation change.
StylizedOutcome run_stylized(const std::vector<AgentGroup>& groups,
                             const UniformSignal& sig);

/// Same, but reports are elicited under the given scheme for every group.
StylizedOutcome run_stylized(const std::vector<AgentGroup>& groups,
                             const UniformSignal& sig, const Scheme& scheme);

/// Control/treatment split of one group: the control wing keeps its prior in
/// both waves, the treated wing updates on the signal.
struct SplitOutcome {
  GroupOutcome control;
  GroupOutcome treated;
};

SplitOutcome control_treatment_split(const AgentGroup& group,
                                     const UniformSignal& sig);

/// The two benchmark groups and the default information signal.
AgentGroup default_group1();
AgentGroup default_group2();
std::vector<AgentGroup> default_groups();
UniformSignal default_signal();

}  // namespace elicit
