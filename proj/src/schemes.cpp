#include "elicit/schemes.hpp"

#include <algorithm>
#include <cmath>

#include "elicit/special.hpp"

namespace elicit {

namespace {

constexpr double kTol = 1e-12;        // decimal-exact comparisons
constexpr double kPayoffBand = 1e-9;  // maximizer acceptance band
constexpr double kGridStep = 1e-4;
constexpr double kRefineWidth = 1e-7;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_report(double r) {
  if (!(r >= 0.0) || !(r <= 1.0))
    throw InvalidArgumentError("report must lie in [0,1]");
}

double window_payoff(const WindowScheme& w, const BeliefDistribution& dist,
                     double r) {
  return w.bonus * window_mass(dist, r, w.delta);
}

// Merge sorted candidate intervals that touch or overlap.
std::vector<Interval> merge_intervals(std::vector<Interval> xs) {
  std::sort(xs.begin(), xs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const Interval& x : xs) {
    if (!out.empty() && x.lo <= out.back().hi + kTol)
      out.back().hi = std::max(out.back().hi, x.hi);
    else
      out.push_back(x);
  }
  return out;
}

// The discrete window payoff is piecewise constant with jumps only at
// atom value +/- delta, so the argmax set can be enumerated exactly from the
// cell decomposition instead of sampled. Boundary points are evaluated
// separately: with inclusive window endpoints an isolated boundary report can
// capture two atoms at once.
ReportSolution window_optimal_discrete(const WindowScheme& w,
                                       const DiscreteBelief& dist) {
  std::vector<double> cuts{0.0, 1.0};
  for (const Atom& a : dist.atoms()) {
    cuts.push_back(std::clamp(a.value - w.delta, 0.0, 1.0));
    cuts.push_back(std::clamp(a.value + w.delta, 0.0, 1.0));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto payoff_at = [&](double r) {
    double mass = 0.0;
    for (const Atom& a : dist.atoms())
      if (std::fabs(a.value - r) <= w.delta + kTol) mass += a.prob;
    return w.bonus * mass;
  };

  struct Candidate {
    Interval span;
    double payoff;
  };
  std::vector<Candidate> cands;
  double best = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double p = payoff_at(cuts[i]);
    cands.push_back({{cuts[i], cuts[i]}, p});
    best = std::max(best, p);
    if (i + 1 < cuts.size()) {
      const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
      const double pc = payoff_at(mid);
      cands.push_back({{cuts[i], cuts[i + 1]}, pc});
      best = std::max(best, pc);
    }
  }

  std::vector<Interval> winners;
  for (const Candidate& c : cands)
    if (c.payoff >= best - kPayoffBand) winners.push_back(c.span);

  ReportSolution sol;
  sol.reports = merge_intervals(std::move(winners));
  sol.payoff = best;
  sol.method = SolveMethod::GridSearch;
  return sol;
}

// Continuous case: scan a 1e-4 grid, keep every point within the payoff band
// of the maximum, and refine each contiguous run locally to 1e-7.
ReportSolution window_optimal_beta(const WindowScheme& w,
                                   const BetaBelief& dist) {
  const BeliefDistribution d = dist;
  const auto payoff_at = [&](double r) { return window_payoff(w, d, r); };

  const int n = static_cast<int>(std::lround(1.0 / kGridStep)) + 1;
  std::vector<double> payoff(n);
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double r = std::min(1.0, i * kGridStep);
    payoff[i] = payoff_at(r);
    best = std::max(best, payoff[i]);
  }

  struct Refined {
    Interval span;
    double payoff;
  };
  std::vector<Refined> refined;
  int i = 0;
  while (i < n) {
    if (payoff[i] < best - kPayoffBand) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && payoff[j + 1] >= best - kPayoffBand) ++j;
    const double lo = i * kGridStep;
    const double hi = std::min(1.0, j * kGridStep);
    if (i == j) {
      // Single grid point: ternary search on the bracketing cell. The payoff
      // can peak in a kink exactly at the grid point (clipped windows do
      // this), in which case the refined point sits a hair off the kink and
      // scores below it; keep whichever of the two is better.
      double a = std::max(0.0, lo - kGridStep);
      double b = std::min(1.0, hi + kGridStep);
      while (b - a > kRefineWidth) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        if (payoff_at(m1) < payoff_at(m2))
          a = m1;
        else
          b = m2;
      }
      const double r = 0.5 * (a + b);
      const double pr = payoff_at(r);
      if (pr > payoff[i])
        refined.push_back({{r, r}, pr});
      else
        refined.push_back({{lo, lo}, payoff[i]});
    } else {
      // Flat run: push the edges out to the band boundary.
      double lo_ref = lo;
      if (i > 0) {
        double a = lo - kGridStep, b = lo;
        while (b - a > kRefineWidth) {
          const double m = 0.5 * (a + b);
          (payoff_at(m) >= best - kPayoffBand ? b : a) = m;
        }
        lo_ref = b;
      }
      double hi_ref = hi;
      if (j + 1 < n) {
        double a = hi, b = std::min(1.0, hi + kGridStep);
        while (b - a > kRefineWidth) {
          const double m = 0.5 * (a + b);
          (payoff_at(m) >= best - kPayoffBand ? a : b) = m;
        }
        hi_ref = a;
      }
      double run_best = payoff_at(0.5 * (lo_ref + hi_ref));
      for (int k = i; k <= j; ++k) run_best = std::max(run_best, payoff[k]);
      refined.push_back({{lo_ref, hi_ref}, run_best});
    }
    i = j + 1;
  }

  // Refinement can raise the maximum above the best grid value, so filter
  // the candidate set against the final payoff.
  for (const Refined& r : refined) best = std::max(best, r.payoff);
  std::vector<Interval> winners;
  for (const Refined& r : refined)
    if (r.payoff >= best - kPayoffBand) winners.push_back(r.span);

  ReportSolution sol;
  sol.reports = merge_intervals(std::move(winners));
  sol.payoff = best;
  sol.method = SolveMethod::GridSearch;
  return sol;
}

// Grid check of local single-peakedness: nondecreasing below the grid
// argmax, nonincreasing above it within [m - eps, m + eps], and at least as
// much density anywhere inside that band as anywhere outside it.
bool locally_unimodal(const BetaBelief& dist, double eps) {
  constexpr int kGridPoints = 10000;
  const double h = 1.0 / (kGridPoints - 1);
  std::vector<double> f(kGridPoints);
  int peak = 0;
  for (int i = 0; i < kGridPoints; ++i) {
    f[i] = pdf(dist, i * h);
    if (f[i] > f[peak]) peak = i;
  }
  const int lo = std::max(0, peak - static_cast<int>(eps / h));
  const int hi = std::min(kGridPoints - 1, peak + static_cast<int>(eps / h));
  const double slack = 1e-9 * (1.0 + std::fabs(f[peak]));
  for (int i = lo; i < peak; ++i)
    if (f[i + 1] < f[i] - slack) return false;
  for (int i = peak; i < hi; ++i)
    if (f[i + 1] > f[i] + slack) return false;
  double min_inside = f[peak];
  for (int i = lo; i <= hi; ++i) min_inside = std::min(min_inside, f[i]);
  for (int i = 0; i < kGridPoints; ++i) {
    if (i >= lo && i <= hi) continue;
    if (f[i] > min_inside + slack) return false;
  }
  return true;
}

}  // namespace

void validate(const Scheme& scheme) {
  std::visit(overloaded{
                 [](const WindowScheme& w) {
                   if (!(w.delta >= 0.0) || !(w.delta < 0.5))
                     throw InvalidArgumentError(
                         "window half-width must lie in [0, 0.5)");
                   if (!(w.bonus > 0.0))
                     throw InvalidArgumentError("window bonus must be > 0");
                 },
                 [](const QuadraticScheme& q) {
                   if (!(q.b > q.a) || !(q.a > 0.0))
                     throw InvalidArgumentError(
                         "quadratic scheme requires b > a > 0");
                 },
                 [](const AbsoluteScheme& a) {
                   if (!(a.b > a.a) || !(a.a > 0.0))
                     throw InvalidArgumentError(
                         "absolute scheme requires b > a > 0");
                 },
                 [](const NoIncentive&) {},
             },
             scheme);
}

double expected_payoff(const Scheme& scheme, const BeliefDistribution& dist,
                       double report) {
  validate(scheme);
  check_report(report);
  return std::visit(
      overloaded{
          [&](const WindowScheme& w) { return window_payoff(w, dist, report); },
          [&](const QuadraticScheme& q) {
            const double m = mean(dist);
            const double mse = variance(dist) + (m - report) * (m - report);
            return q.b - q.a * mse;
          },
          [&](const AbsoluteScheme& a) {
            return a.b - a.a * mean_abs_deviation(dist, report);
          },
          [&](const NoIncentive&) -> double {
            throw NoBestResponseError(
                "no-incentive elicitation pays nothing for accuracy; "
                "reports cannot be mapped to the belief distribution");
          },
      },
      scheme);
}

ReportSolution optimal_report(const Scheme& scheme,
                              const BeliefDistribution& dist) {
  validate(scheme);
  return std::visit(
      overloaded{
          [&](const WindowScheme& w) {
            if (const auto* disc = std::get_if<DiscreteBelief>(&dist))
              return window_optimal_discrete(w, *disc);
            return window_optimal_beta(w, std::get<BetaBelief>(dist));
          },
          [&](const QuadraticScheme&) {
            const double m = mean(dist);
            ReportSolution sol;
            sol.reports = {{m, m}};
            sol.payoff = expected_payoff(scheme, dist, m);
            sol.method = SolveMethod::Analytic;
            return sol;
          },
          [&](const AbsoluteScheme&) {
            const Interval med = median(dist);
            ReportSolution sol;
            sol.reports = {med};
            sol.payoff = expected_payoff(scheme, dist, med.midpoint());
            sol.method = SolveMethod::Analytic;
            return sol;
          },
          [&](const NoIncentive&) -> ReportSolution {
            throw NoBestResponseError(
                "no-incentive elicitation admits no best response");
          },
      },
      scheme);
}

ModeLocalization classify_mode_localization(const BeliefDistribution& dist,
                                         double half_width) {
  if (!(half_width >= 0.0))
    throw InvalidArgumentError("window half-width must be >= 0");
  if (const auto* disc = std::get_if<DiscreteBelief>(&dist)) {
    return disc->min_support_gap() > half_width
               ? ModeLocalization::DiscreteSeparated
               : ModeLocalization::NotApplicable;
  }
  const auto& beta = std::get<BetaBelief>(dist);
  if (beta.alpha() > 1.0 && beta.beta() > 1.0)
    return ModeLocalization::GlobalUnimodal;
  for (const double mult : {2.0, 4.0, 8.0}) {
    const double eps = mult * half_width;
    if (eps > half_width && locally_unimodal(beta, eps))
      return ModeLocalization::LocalUnimodal;
  }
  return ModeLocalization::NotApplicable;
}

}  // namespace elicit
