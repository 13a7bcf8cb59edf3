#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "elicit/schemes.hpp"
#include "elicit/stylized.hpp"
#include "oracles.hpp"

using namespace elicit;

namespace {

const DiscreteBelief& b1() {
  static const DiscreteBelief d = default_group1().beliefs;
  return d;
}

double grid_argmax(const Scheme& s, const BeliefDistribution& d, double step) {
  double best_r = 0.0, best_p = -1e300;
  const int n = static_cast<int>(std::lround(1.0 / step));
  for (int i = 0; i <= n; ++i) {
    const double r = std::min(1.0, i * step);
    const double p = expected_payoff(s, d, r);
    if (p > best_p) {
      best_p = p;
      best_r = r;
    }
  }
  return best_r;
}

}  // namespace

TEST_CASE("scheme validation") {
  CHECK_THROWS_AS(validate(Scheme(WindowScheme{0.6, 1.0})), InvalidArgumentError);
  CHECK_THROWS_AS(validate(Scheme(WindowScheme{0.02, 0.0})), InvalidArgumentError);
  CHECK_THROWS_AS(validate(Scheme(QuadraticScheme{2.0, 1.0})), InvalidArgumentError);
  CHECK_THROWS_AS(validate(Scheme(AbsoluteScheme{0.0, 1.0})), InvalidArgumentError);
  CHECK_NOTHROW(validate(Scheme(NoIncentive{})));
}

TEST_CASE("expected payoffs") {
  CHECK(std::fabs(expected_payoff(WindowScheme{0.02, 1.0}, b1(), 0.30) - 0.35) <
        1e-12);
  CHECK(expected_payoff(QuadraticScheme{1.0, 2.0}, BetaBelief(2.0, 2.0), 0.5) ==
        doctest::Approx(1.95).epsilon(1e-12));
  CHECK(expected_payoff(AbsoluteScheme{1.0, 2.0}, DiscreteBelief({{0.3, 1.0}}),
                        0.3) == doctest::Approx(2.0));
  CHECK_THROWS_AS(expected_payoff(NoIncentive{}, b1(), 0.5), NoBestResponseError);
  CHECK_THROWS_AS(expected_payoff(WindowScheme{0.02, 1.0}, b1(), 1.2),
                  InvalidArgumentError);
}

TEST_CASE("window optimum on the benchmark group") {
  const ReportSolution sol = optimal_report(WindowScheme{0.02, 1.0}, b1());
  REQUIRE(sol.reports.size() == 1);
  // Payoff plateau [0.28, 0.32] around the modal atom.
  CHECK(sol.reports[0].lo == doctest::Approx(0.28).epsilon(1e-9));
  CHECK(sol.reports[0].hi == doctest::Approx(0.32).epsilon(1e-9));
  CHECK(std::fabs(sol.primary_report() - 0.30) < 1e-12);
  CHECK(sol.payoff == doctest::Approx(0.35));
  CHECK(sol.method == SolveMethod::GridSearch);
  CHECK(classify_mode_localization(b1(), 0.02) ==
        ModeLocalization::DiscreteSeparated);
}

TEST_CASE("quadratic optimum is the mean") {
  const BetaBelief skew(1.5, 4.0);
  const ReportSolution sol = optimal_report(QuadraticScheme{1.0, 2.0}, skew);
  CHECK(sol.primary_report() == doctest::Approx(0.272727272727).epsilon(1e-10));
  CHECK(sol.method == SolveMethod::Analytic);
  CHECK(std::fabs(sol.payoff - expected_payoff(QuadraticScheme{1.0, 2.0}, skew,
                                               sol.primary_report())) < 1e-12);
}

TEST_CASE("window optimum on the calibrated beta stays near the mode") {
  const BetaBelief skew(1.5, 4.0);
  const ReportSolution sol = optimal_report(WindowScheme{0.02, 1.0}, skew);
  REQUIRE(!sol.reports.empty());
  const double m = mode(skew);
  for (const Interval& iv : sol.reports) {
    CHECK(iv.lo >= m - 0.02 - 1e-6);
    CHECK(iv.hi <= m + 0.02 + 1e-6);
  }
  // Brute-force scan at 1e-5 confirms the grid result.
  const double brute = grid_argmax(WindowScheme{0.02, 1.0}, skew, 1e-5);
  CHECK(brute >= m - 0.02 - 1e-5);
  CHECK(brute <= m + 0.02 + 1e-5);
  CHECK(expected_payoff(WindowScheme{0.02, 1.0}, skew, brute) <=
        sol.payoff + 1e-9);
}

TEST_CASE("mode localization classification") {
  CHECK(classify_mode_localization(b1(), 0.06) == ModeLocalization::NotApplicable);
  CHECK(classify_mode_localization(BetaBelief(1.5, 4.0), 0.02) ==
        ModeLocalization::GlobalUnimodal);
  // Monotone density: single-peaked only locally at the boundary.
  CHECK(classify_mode_localization(BetaBelief(0.8, 5.0), 0.02) ==
        ModeLocalization::LocalUnimodal);
}

TEST_CASE("no-incentive scheme refuses to produce a report") {
  CHECK_THROWS_AS(optimal_report(NoIncentive{}, b1()), NoBestResponseError);
}

TEST_CASE("window maximizers stay within mode +/- delta for unimodal betas") {
  SplitMix64 rng(314159);
  const double deltas[] = {0.001, 0.01, 0.02, 0.1};
  for (int trial = 0; trial < 200; ++trial) {
    const BetaBelief b = oracles::random_unimodal_beta(rng, 1.0 + 1e-9, 10.0);
    const double m = mode(b);
    const double delta = deltas[trial % 4];
    const ReportSolution sol = optimal_report(WindowScheme{delta, 1.0}, b);
    for (const Interval& iv : sol.reports) {
      CHECK(iv.lo >= m - delta - 1e-6);
      CHECK(iv.hi <= m + delta + 1e-6);
    }
  }
}

TEST_CASE("window optimum on well-separated discrete beliefs is the modal atom") {
  SplitMix64 rng(271828);
  for (int trial = 0; trial < 200; ++trial) {
    const double delta = (trial % 2 == 0) ? 0.02 : 0.01;
    const DiscreteBelief d = oracles::random_separated_discrete(rng, delta);
    const double m = mode(d);
    const ReportSolution sol = optimal_report(WindowScheme{delta, 1.0}, d);
    REQUIRE(sol.reports.size() == 1);
    CHECK(std::fabs(sol.primary_report() - m) < 1e-9);
    CHECK(std::fabs(sol.reports[0].width() - 2.0 * delta) < 1e-9);
  }
}

TEST_CASE("quadratic and absolute optima agree with brute-force search") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    BeliefDistribution d = (trial % 2 == 0)
                               ? BeliefDistribution(oracles::random_unimodal_beta(rng, 0.8, 9.0))
                               : BeliefDistribution(oracles::random_discrete(rng));

    const ReportSolution quad = optimal_report(QuadraticScheme{1.0, 2.0}, d);
    CHECK(std::fabs(quad.primary_report() - mean(d)) < 1e-9);
    const double brute_q = grid_argmax(QuadraticScheme{1.0, 2.0}, d, 1e-4);
    CHECK(std::fabs(brute_q - mean(d)) <= 1e-4 + 1e-9);

    const ReportSolution abs = optimal_report(AbsoluteScheme{1.0, 2.0}, d);
    const Interval med = median(d);
    CHECK(abs.reports[0].lo == doctest::Approx(med.lo).epsilon(1e-9));
    CHECK(abs.reports[0].hi == doctest::Approx(med.hi).epsilon(1e-9));
    const double brute_a = grid_argmax(AbsoluteScheme{1.0, 2.0}, d, 1e-4);
    CHECK(brute_a >= med.lo - 1e-4 - 1e-9);
    CHECK(brute_a <= med.hi + 1e-4 + 1e-9);

    // Flat payoff across the median interval.
    const double p_lo = expected_payoff(AbsoluteScheme{1.0, 2.0}, d, med.lo);
    const double p_mid = expected_payoff(AbsoluteScheme{1.0, 2.0}, d, med.midpoint());
    const double p_hi = expected_payoff(AbsoluteScheme{1.0, 2.0}, d, med.hi);
    CHECK(std::fabs(p_lo - p_mid) < 1e-9);
    CHECK(std::fabs(p_hi - p_mid) < 1e-9);
  }
}

TEST_CASE("payoffs stay inside their structural bounds") {
  SplitMix64 rng(321);
  for (int trial = 0; trial < 100; ++trial) {
    BeliefDistribution d = (trial % 2 == 0)
                               ? BeliefDistribution(oracles::random_unimodal_beta(rng, 0.7, 9.0))
                               : BeliefDistribution(oracles::random_discrete(rng));
    const double r = rng.next_double();
    const double w = expected_payoff(WindowScheme{0.03, 2.5}, d, r);
    CHECK(w >= 0.0);
    CHECK(w <= 2.5 + 1e-12);
    const double q = expected_payoff(QuadraticScheme{1.5, 2.0}, d, r);
    CHECK(q >= 0.5 - 1e-12);
    CHECK(q <= 2.0 + 1e-12);
    const double a = expected_payoff(AbsoluteScheme{1.5, 2.0}, d, r);
    CHECK(a >= 0.5 - 1e-12);
    CHECK(a <= 2.0 + 1e-12);
  }
}

TEST_CASE("solution payoff matches expected payoff at every reported point") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    BeliefDistribution d = (trial % 2 == 0)
                               ? BeliefDistribution(oracles::random_unimodal_beta(rng, 1.05, 8.0))
                               : BeliefDistribution(oracles::random_discrete(rng));
    for (const Scheme& s :
         {Scheme(WindowScheme{0.02, 1.0}), Scheme(QuadraticScheme{1.0, 2.0}),
          Scheme(AbsoluteScheme{1.0, 2.0})}) {
      const ReportSolution sol = optimal_report(s, d);
      for (const Interval& iv : sol.reports) {
        CHECK(std::fabs(expected_payoff(s, d, iv.midpoint()) - sol.payoff) <
              1e-9);
      }
    }
  }
}
