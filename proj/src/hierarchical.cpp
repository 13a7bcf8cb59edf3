#include "elicit/hierarchical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "elicit/rng.hpp"
#include "elicit/special.hpp"

namespace elicit {

namespace {

constexpr double kClamp = 1e-6;
constexpr int kMaxIterations = 10000;

void check_hyper(const HyperParams& h) {
  if (!(h.ell > 0.0) || !(h.q > 0.0))
    throw InvalidArgumentError("hyperparameters must be positive");
}

struct LogLik {
  // Sufficient statistics make each evaluation O(1).
  double sum_log = 0.0;
  double sum_log1m = 0.0;
  double n = 0.0;

  explicit LogLik(const std::vector<double>& v) {
    for (double x : v) {
      sum_log += std::log(x);
      sum_log1m += std::log1p(-x);
    }
    n = static_cast<double>(v.size());
  }

  double operator()(double a, double b) const {
    return (a - 1.0) * sum_log + (b - 1.0) * sum_log1m - n * log_beta(a, b);
  }
};

// Nelder-Mead on (log a, log b); returns the best vertex. Throws
// NonConvergenceError at the iteration cap.
std::array<double, 2> simplex_descent(const LogLik& ll, double a0, double b0,
                                      int* iterations_out) {
  using Point = std::array<double, 2>;
  const auto eval = [&](const Point& p) {
    return -ll(std::exp(p[0]), std::exp(p[1]));
  };

  std::array<Point, 3> vertex = {Point{std::log(a0), std::log(b0)},
                                 Point{std::log(a0) + 0.1, std::log(b0)},
                                 Point{std::log(a0), std::log(b0) + 0.1}};
  std::array<double, 3> value = {eval(vertex[0]), eval(vertex[1]),
                                 eval(vertex[2])};

  int iter = 0;
  for (; iter < kMaxIterations; ++iter) {
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return value[i] < value[j]; });
    const int best = order[0], mid = order[1], worst = order[2];

    const double spread = std::fabs(value[worst] - value[best]);
    const double size = std::max(
        std::fabs(vertex[worst][0] - vertex[best][0]),
        std::fabs(vertex[worst][1] - vertex[best][1]));
    if (spread < 1e-12 * (1.0 + std::fabs(value[best])) && size < 1e-10) break;

    const Point centroid = {0.5 * (vertex[best][0] + vertex[mid][0]),
                            0.5 * (vertex[best][1] + vertex[mid][1])};
    const auto blend = [&](double t) {
      return Point{centroid[0] + t * (centroid[0] - vertex[worst][0]),
                   centroid[1] + t * (centroid[1] - vertex[worst][1])};
    };

    const Point reflected = blend(1.0);
    const double fr = eval(reflected);
    if (fr < value[best]) {
      const Point expanded = blend(2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        vertex[worst] = expanded;
        value[worst] = fe;
      } else {
        vertex[worst] = reflected;
        value[worst] = fr;
      }
    } else if (fr < value[mid]) {
      vertex[worst] = reflected;
      value[worst] = fr;
    } else {
      const Point contracted = blend(fr < value[worst] ? 0.5 : -0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, value[worst])) {
        vertex[worst] = contracted;
        value[worst] = fc;
      } else {
        for (int i : {mid, worst}) {
          vertex[i] = {0.5 * (vertex[i][0] + vertex[best][0]),
                       0.5 * (vertex[i][1] + vertex[best][1])};
          value[i] = eval(vertex[i]);
        }
      }
    }
  }
  if (iter >= kMaxIterations)
    throw NonConvergenceError("simplex descent hit its iteration cap");
  if (iterations_out) *iterations_out = iter;

  const int best = value[0] <= value[1] && value[0] <= value[2]
                       ? 0
                       : (value[1] <= value[2] ? 1 : 2);
  return {std::exp(vertex[best][0]), std::exp(vertex[best][1])};
}

}  // namespace

std::vector<BetaBelief> sample_population(const HyperParams& hyper,
                                          std::size_t count,
                                          std::uint64_t seed) {
  check_hyper(hyper);
  if (count < 1) throw InvalidArgumentError("population size must be >= 1");
  std::vector<BetaBelief> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 rng = substream(seed, i);
    const double alpha = 1.0 + draw_chi_squared(rng, hyper.ell);
    const double beta = 1.0 + draw_chi_squared(rng, hyper.q);
    out.emplace_back(alpha, beta);
  }
  return out;
}

BetaBelief mode_distribution(const HyperParams& hyper) {
  check_hyper(hyper);
  return BetaBelief(0.5 * hyper.ell, 0.5 * hyper.q);
}

FitResult fit_mle(const ModeDataset& data) {
  const auto& v = data.reports;
  if (v.size() < 10)
    throw InvalidArgumentError("need at least 10 reports to fit");
  double lo = v[0], hi = v[0], sum = 0.0;
  for (double x : v) {
    if (!(x > 0.0) || !(x < 1.0))
      throw InvalidArgumentError("reports must lie strictly inside (0,1)");
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    sum += x;
  }
  if (hi - lo < 1e-15)
    throw DegenerateDataError("all reports are identical");

  const double n = static_cast<double>(v.size());
  const double m = sum / n;
  double s2 = 0.0;
  for (double x : v) s2 += (x - m) * (x - m);
  s2 /= n;

  // Method-of-moments start.
  const double common = std::max(m * (1.0 - m) / s2 - 1.0, 1e-3);
  const double a0 = std::clamp(m * common, 1e-3, 1e6);
  const double b0 = std::clamp((1.0 - m) * common, 1e-3, 1e6);

  const LogLik ll(v);
  const auto est = simplex_descent(ll, a0, b0, nullptr);

  FitResult fit;
  fit.a_hat = est[0];
  fit.b_hat = est[1];
  fit.loglik = ll(fit.a_hat, fit.b_hat);

  // Observed information by central finite differences.
  const double ha = 1e-4 * (1.0 + fit.a_hat);
  const double hb = 1e-4 * (1.0 + fit.b_hat);
  const auto f = [&](double a, double b) { return -ll(a, b); };
  const double faa = (f(fit.a_hat + ha, fit.b_hat) - 2.0 * f(fit.a_hat, fit.b_hat) +
                      f(fit.a_hat - ha, fit.b_hat)) /
                     (ha * ha);
  const double fbb = (f(fit.a_hat, fit.b_hat + hb) - 2.0 * f(fit.a_hat, fit.b_hat) +
                      f(fit.a_hat, fit.b_hat - hb)) /
                     (hb * hb);
  const double fab = (f(fit.a_hat + ha, fit.b_hat + hb) -
                      f(fit.a_hat + ha, fit.b_hat - hb) -
                      f(fit.a_hat - ha, fit.b_hat + hb) +
                      f(fit.a_hat - ha, fit.b_hat - hb)) /
                     (4.0 * ha * hb);
  const double det = faa * fbb - fab * fab;
  if (!(det > 0.0) || !(faa > 0.0))
    throw NonConvergenceError("observed information is not positive definite");
  const double var_a = fbb / det;
  const double var_b = faa / det;
  const double z = 1.959963984540054;
  fit.ci_a = {fit.a_hat - z * std::sqrt(var_a), fit.a_hat + z * std::sqrt(var_a)};
  fit.ci_b = {fit.b_hat - z * std::sqrt(var_b), fit.b_hat + z * std::sqrt(var_b)};
  fit.ell_rounded = static_cast<int>(std::ceil(2.0 * fit.a_hat));
  fit.q_rounded = static_cast<int>(std::ceil(2.0 * fit.b_hat));
  return fit;
}

QuantifyResult quantify_opposite_share(const HyperParams& hyper,
                                       const BinomialSignal& sig, double delta,
                                       std::size_t draws, std::uint64_t seed,
                                       bool require_mass_condition) {
  check_hyper(hyper);
  if (draws < 1) throw InvalidArgumentError("draw count must be >= 1");
  if (!(delta >= 0.0))
    throw InvalidArgumentError("window half-width must be >= 0");

  std::size_t hits = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    SplitMix64 rng = substream(seed, i);
    const double alpha = 1.0 + draw_chi_squared(rng, hyper.ell);
    const double beta = 1.0 + draw_chi_squared(rng, hyper.q);
    const double mu = alpha / (alpha + beta);
    const double m = (alpha - 1.0) / (alpha + beta - 2.0);
    const bool straddles = (mu > sig.x_hat && m < sig.x_hat) ||
                           (mu < sig.x_hat && m > sig.x_hat);
    if (!straddles) continue;
    if (require_mass_condition) {
      const BetaBelief belief(alpha, beta);
      if (!(window_mass(belief, m, delta) >= window_mass(belief, mu, delta)))
        continue;
    }
    ++hits;
  }

  QuantifyResult res;
  res.share = static_cast<double>(hits) / static_cast<double>(draws);
  res.draws = draws;
  res.seed = seed;
  res.x_hat = sig.x_hat;
  res.n = sig.n;
  res.delta = delta;
  return res;
}

Moments model_fit_moments(const HyperParams& hyper) {
  const BetaBelief dist = mode_distribution(hyper);
  return {mean(dist), variance(dist)};
}

ModeDataset load_mode_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw InvalidArgumentError("empty dataset");
  // Tolerate CR and surrounding whitespace in the header.
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  if (trim(line) != "report")
    throw InvalidArgumentError("dataset must start with a `report` header");

  ModeDataset data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string cell = trim(line);
    if (cell.empty()) continue;
    std::size_t pos = 0;
    double x = 0.0;
    try {
      x = std::stod(cell, &pos);
    } catch (const std::exception&) {
      throw InvalidArgumentError("unparseable report on line " +
                                 std::to_string(line_no));
    }
    if (pos != cell.size())
      throw InvalidArgumentError("trailing junk on line " +
                                 std::to_string(line_no));
    if (!(x >= 0.0) || !(x <= 1.0))
      throw InvalidArgumentError("report outside [0,1] on line " +
                                 std::to_string(line_no));
    if (x < kClamp) {
      x = kClamp;
      ++data.clamped_count;
    } else if (x > 1.0 - kClamp) {
      x = 1.0 - kClamp;
      ++data.clamped_count;
    }
    data.reports.push_back(x);
  }
  if (data.reports.empty())
    throw InvalidArgumentError("dataset holds no reports");
  return data;
}

}  // namespace elicit
