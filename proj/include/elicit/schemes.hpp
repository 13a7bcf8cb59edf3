#pragma once

#include <variant>
#include <vector>

#include "elicit/distributions.hpp"

namespace elicit {

/// Pays `bonus` iff the realized proportion lands within `delta` of the
/// report.
struct WindowScheme {
  double delta = 0.02;  // half-width as a fraction
  double bonus = 1.0;
};

/// Pays b - a (x - r)^2.
struct QuadraticScheme {
  double a = 1.0;  // loss coefficient
  double b = 2.0;  // base payment, b > a > 0
};

/// Pays b - a |x - r|.
struct AbsoluteScheme {
  double a = 1.0;
  double b = 2.0;
};

/// No reward for accuracy: reports carry no best response.
struct NoIncentive {};

using Scheme = std::variant<WindowScheme, QuadraticScheme, AbsoluteScheme,
                            NoIncentive>;

/// Throws InvalidArgumentError unless the scheme's parameters are admissible
/// (window: 0 <= delta < 0.5, bonus > 0; quadratic/absolute: b > a > 0).
void validate(const Scheme& scheme);

enum class SolveMethod { Analytic, GridSearch };

/// The full set of profit-maximizing reports (disjoint closed intervals,
/// smallest first) together with the payoff they attain. Interval midpoints
/// are the canonical point reports.
struct ReportSolution {
  std::vector<Interval> reports;
  double payoff = 0.0;
  SolveMethod method = SolveMethod::Analytic;

  double primary_report() const { return reports.front().midpoint(); }
};

/// Which sufficient condition localizes the window-scheme optimum at the
/// mode.
enum class ModeLocalization {
  DiscreteSeparated,
  GlobalUnimodal,
  LocalUnimodal,
  NotApplicable,
};

/// Expected reward of reporting `report` under `scheme` given beliefs `dist`.
/// Throws NoBestResponseError for NoIncentive.
double expected_payoff(const Scheme& scheme, const BeliefDistribution& dist,
                       double report);

/// Profit-maximizing report(s): the mean under the quadratic scheme, the
/// median interval under the absolute scheme, and a window-mass search under
/// the window scheme. Throws NoBestResponseError for NoIncentive.
ReportSolution optimal_report(const Scheme& scheme,
                              const BeliefDistribution& dist);

/// Classifies which sufficient condition (if any) guarantees the window
/// optimum sits near the mode: discrete support separated by more than
/// half_width, a globally single-peaked Beta (both shapes > 1), or local
/// single-peakedness verified on a grid.
ModeLocalization classify_mode_localization(const BeliefDistribution& dist,
                                         double half_width);

}  // namespace elicit
