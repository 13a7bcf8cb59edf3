#pragma once

#include <variant>
#include <vector>

#include "elicit/errors.hpp"

namespace elicit {

/// Closed interval of proportions; degenerate (lo == hi) for point results.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double midpoint() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
};

struct Atom {
  double value = 0.0;  // proportion in [0,1]
  double prob = 0.0;   // strictly positive
};

/// Point-mass belief over a proportion.
///
/// Atoms must be strictly increasing in value, have strictly positive
/// probabilities, and sum to 1 within 1e-12. Values are ordinary decimals, so
/// plain double sums stay well inside that tolerance.
class DiscreteBelief {
 public:
  explicit DiscreteBelief(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }

  /// Smallest distance between two support points; +inf for a single atom.
  double min_support_gap() const;

 private:
  std::vector<Atom> atoms_;
};

/// Beta(alpha, beta) belief over a proportion. Shapes must be positive;
/// mode queries additionally require both shapes > 1.
class BetaBelief {
 public:
  BetaBelief(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

using BeliefDistribution = std::variant<DiscreteBelief, BetaBelief>;

double mean(const DiscreteBelief& d);
double mean(const BetaBelief& d);
double mean(const BeliefDistribution& d);

/// Unique highest-probability atom (discrete) or (a-1)/(a+b-2) (Beta).
/// Throws AmbiguousModeError on discrete ties and UndefinedModeError when a
/// Beta shape is <= 1.
double mode(const DiscreteBelief& d);
double mode(const BetaBelief& d);
double mode(const BeliefDistribution& d);

/// Full argmin set of E|x - r|: a point for continuous distributions,
/// possibly an interval for discrete ones.
Interval median(const DiscreteBelief& d);
Interval median(const BetaBelief& d);
Interval median(const BeliefDistribution& d);

double variance(const DiscreteBelief& d);
double variance(const BetaBelief& d);
double variance(const BeliefDistribution& d);

/// P(x in [report - half_width, report + half_width]), window clipped to
/// [0,1]. Endpoints are inclusive for discrete atoms: an atom exactly
/// half_width away counts.
double window_mass(const DiscreteBelief& d, double report, double half_width);
double window_mass(const BetaBelief& d, double report, double half_width);
double window_mass(const BeliefDistribution& d, double report,
                   double half_width);

/// P(x <= t).
double cdf(const DiscreteBelief& d, double t);
double cdf(const BetaBelief& d, double t);
double cdf(const BeliefDistribution& d, double t);

/// E|x - r|.
double mean_abs_deviation(const DiscreteBelief& d, double r);
double mean_abs_deviation(const BetaBelief& d, double r);
double mean_abs_deviation(const BeliefDistribution& d, double r);

/// Density of a Beta belief at x.
double pdf(const BetaBelief& d, double x);

}  // namespace elicit
