#include "elicit/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elicit/special.hpp"

namespace elicit {

namespace {

// Matching the exactness of the decimal inputs: comparisons that the theory
// makes with equality are made within this tolerance.
constexpr double kTol = 1e-12;

void check_proportion(double x, const char* what) {
  if (!(x >= 0.0) || !(x <= 1.0))
    throw InvalidArgumentError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

DiscreteBelief::DiscreteBelief(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty())
    throw InvalidDistributionError("discrete belief needs at least one atom");
  double total = 0.0;
  double prev = -1.0;
  for (const Atom& a : atoms_) {
    if (!(a.prob > 0.0))
      throw InvalidDistributionError("atom probabilities must be positive");
    if (!(a.value >= 0.0) || !(a.value <= 1.0))
      throw InvalidDistributionError("atom values must lie in [0,1]");
    if (a.value <= prev)
      throw InvalidDistributionError("atom values must be strictly increasing");
    prev = a.value;
    total += a.prob;
  }
  if (std::fabs(total - 1.0) > kTol)
    throw InvalidDistributionError("atom probabilities must sum to 1");
}

double DiscreteBelief::min_support_gap() const {
  if (atoms_.size() < 2) return std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < atoms_.size(); ++i)
    gap = std::min(gap, atoms_[i].value - atoms_[i - 1].value);
  return gap;
}

BetaBelief::BetaBelief(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw InvalidDistributionError("beta shapes must be positive");
}

double mean(const DiscreteBelief& d) {
  double m = 0.0;
  for (const Atom& a : d.atoms()) m += a.value * a.prob;
  return m;
}

double mean(const BetaBelief& d) { return d.alpha() / (d.alpha() + d.beta()); }

double mode(const DiscreteBelief& d) {
  const auto& atoms = d.atoms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (atoms[i].prob > atoms[best].prob) best = i;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (i != best && atoms[i].prob > atoms[best].prob - kTol)
      throw AmbiguousModeError("two or more atoms tie for maximum probability");
  return atoms[best].value;
}

double mode(const BetaBelief& d) {
  if (!(d.alpha() > 1.0) || !(d.beta() > 1.0))
    throw UndefinedModeError("beta mode requires both shapes > 1");
  return (d.alpha() - 1.0) / (d.alpha() + d.beta() - 2.0);
}

Interval median(const DiscreteBelief& d) {
  // E|x - r| is piecewise linear with slope 2 F(v_i) - 1 between atoms; the
  // argmin is the atom where the CDF crosses 1/2, widening to the whole
  // segment when it hits 1/2 exactly.
  const auto& atoms = d.atoms();
  double cum = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    cum += atoms[i].prob;
    if (cum >= 0.5 - kTol) {
      if (std::fabs(cum - 0.5) <= kTol && i + 1 < atoms.size())
        return {atoms[i].value, atoms[i + 1].value};
      return {atoms[i].value, atoms[i].value};
    }
  }
  return {atoms.back().value, atoms.back().value};
}

Interval median(const BetaBelief& d) {
  const double m = beta_cdf_inverse(d.alpha(), d.beta(), 0.5);
  return {m, m};
}

double variance(const DiscreteBelief& d) {
  const double m = mean(d);
  double v = 0.0;
  for (const Atom& a : d.atoms()) v += a.prob * (a.value - m) * (a.value - m);
  return v;
}

double variance(const BetaBelief& d) {
  const double a = d.alpha(), b = d.beta();
  return a * b / ((a + b) * (a + b) * (a + b + 1.0));
}

double window_mass(const DiscreteBelief& d, double report, double half_width) {
  check_proportion(report, "report");
  if (!(half_width >= 0.0))
    throw InvalidArgumentError("window half-width must be >= 0");
  const double lo = std::max(0.0, report - half_width);
  const double hi = std::min(1.0, report + half_width);
  double mass = 0.0;
  for (const Atom& a : d.atoms())
    if (a.value >= lo - kTol && a.value <= hi + kTol) mass += a.prob;
  return mass;
}

double window_mass(const BetaBelief& d, double report, double half_width) {
  check_proportion(report, "report");
  if (!(half_width >= 0.0))
    throw InvalidArgumentError("window half-width must be >= 0");
  const double lo = std::max(0.0, report - half_width);
  const double hi = std::min(1.0, report + half_width);
  return regularized_incomplete_beta(d.alpha(), d.beta(), hi) -
         regularized_incomplete_beta(d.alpha(), d.beta(), lo);
}

double cdf(const DiscreteBelief& d, double t) {
  check_proportion(t, "threshold");
  double mass = 0.0;
  for (const Atom& a : d.atoms())
    if (a.value <= t + kTol) mass += a.prob;
  return mass;
}

double cdf(const BetaBelief& d, double t) {
  check_proportion(t, "threshold");
  return regularized_incomplete_beta(d.alpha(), d.beta(), t);
}

double mean_abs_deviation(const DiscreteBelief& d, double r) {
  check_proportion(r, "report");
  double e = 0.0;
  for (const Atom& a : d.atoms()) e += a.prob * std::fabs(a.value - r);
  return e;
}

double mean_abs_deviation(const BetaBelief& d, double r) {
  check_proportion(r, "report");
  // E|x-r| = 2 r F(r) - r + mu - 2 M(r), with the partial first moment
  // M(r) = mu * I_r(a+1, b).
  const double mu = mean(d);
  const double f = regularized_incomplete_beta(d.alpha(), d.beta(), r);
  const double fp = regularized_incomplete_beta(d.alpha() + 1.0, d.beta(), r);
  return 2.0 * r * f - r + mu - 2.0 * mu * fp;
}

double pdf(const BetaBelief& d, double x) {
  return beta_pdf(d.alpha(), d.beta(), x);
}

double mean(const BeliefDistribution& d) {
  return std::visit([](const auto& v) { return mean(v); }, d);
}
double mode(const BeliefDistribution& d) {
  return std::visit([](const auto& v) { return mode(v); }, d);
}
Interval median(const BeliefDistribution& d) {
  return std::visit([](const auto& v) { return median(v); }, d);
}
double variance(const BeliefDistribution& d) {
  return std::visit([](const auto& v) { return variance(v); }, d);
}
double window_mass(const BeliefDistribution& d, double report,
                   double half_width) {
  return std::visit(
      [&](const auto& v) { return window_mass(v, report, half_width); }, d);
}
double cdf(const BeliefDistribution& d, double t) {
  return std::visit([&](const auto& v) { return cdf(v, t); }, d);
}
double mean_abs_deviation(const BeliefDistribution& d, double r) {
  return std::visit([&](const auto& v) { return mean_abs_deviation(v, r); },
                    d);
}

}  // namespace elicit
