#include "elicit/json_io.hpp"

#include <cstdio>
#include <ostream>

namespace elicit {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw InvalidArgumentError(std::string("missing numeric field `") + key +
                               "`");
  return j.at(key).get<double>();
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw InvalidArgumentError(std::string("missing string field `") + key +
                               "`");
  return j.at(key).get<std::string>();
}

json interval_to_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

}  // namespace

json dist_to_json(const BeliefDistribution& dist) {
  return std::visit(
      overloaded{
          [](const DiscreteBelief& d) {
            json atoms = json::array();
            for (const Atom& a : d.atoms())
              atoms.push_back(json::array({a.value, a.prob}));
            return json{{"type", "discrete"}, {"atoms", atoms}};
          },
          [](const BetaBelief& b) {
            return json{
                {"type", "beta"}, {"alpha", b.alpha()}, {"beta", b.beta()}};
          },
      },
      dist);
}

BeliefDistribution dist_from_json(const json& j) {
  const std::string type = require_string(j, "type");
  if (type == "beta")
    return BetaBelief(require_number(j, "alpha"), require_number(j, "beta"));
  if (type == "discrete") {
    if (!j.contains("atoms") || !j.at("atoms").is_array())
      throw InvalidArgumentError("discrete distribution needs an `atoms` array");
    std::vector<Atom> atoms;
    for (const json& pair : j.at("atoms")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number())
        throw InvalidArgumentError("each atom must be a [value, prob] pair");
      atoms.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return DiscreteBelief(std::move(atoms));
  }
  throw InvalidArgumentError("unknown distribution type `" + type + "`");
}

json scheme_to_json(const Scheme& scheme) {
  return std::visit(
      overloaded{
          [](const WindowScheme& w) {
            return json{
                {"scheme", "window"}, {"delta", w.delta}, {"bonus", w.bonus}};
          },
          [](const QuadraticScheme& q) {
            return json{{"scheme", "quadratic"}, {"a", q.a}, {"b", q.b}};
          },
          [](const AbsoluteScheme& a) {
            return json{{"scheme", "absolute"}, {"a", a.a}, {"b", a.b}};
          },
          [](const NoIncentive&) { return json{{"scheme", "no_incentive"}}; },
      },
      scheme);
}

Scheme scheme_from_json(const json& j) {
  const std::string kind = require_string(j, "scheme");
  Scheme scheme;
  if (kind == "window")
    scheme = WindowScheme{require_number(j, "delta"), require_number(j, "bonus")};
  else if (kind == "quadratic")
    scheme = QuadraticScheme{require_number(j, "a"), require_number(j, "b")};
  else if (kind == "absolute")
    scheme = AbsoluteScheme{require_number(j, "a"), require_number(j, "b")};
  else if (kind == "no_incentive")
    scheme = NoIncentive{};
  else
    throw InvalidArgumentError("unknown scheme `" + kind + "`");
  validate(scheme);
  return scheme;
}

json signal_to_json(const SignalVariant& sig) {
  return std::visit(
      overloaded{
          [](const BinomialSignal& s) {
            return json{{"type", "binomial"}, {"x_hat", s.x_hat}, {"n", s.n}};
          },
          [](const UniformSignal& s) {
            return json{{"type", "uniform"},
                        {"signal", s.signal},
                        {"half_width", s.half_width}};
          },
      },
      sig);
}

SignalVariant signal_from_json(const json& j) {
  const std::string type = require_string(j, "type");
  if (type == "binomial")
    return BinomialSignal{require_number(j, "x_hat"), require_number(j, "n")};
  if (type == "uniform")
    return UniformSignal{require_number(j, "signal"),
                         require_number(j, "half_width")};
  throw InvalidArgumentError("unknown signal type `" + type + "`");
}

json report_solution_to_json(const ReportSolution& sol) {
  json reports = json::array();
  for (const Interval& iv : sol.reports) reports.push_back(interval_to_json(iv));
  return json{{"reports", reports},
              {"report", sol.primary_report()},
              {"payoff", sol.payoff},
              {"method", method_name(sol.method)}};
}

json update_report_to_json(const UpdateReport& rep) {
  return json{{"prior_mean", rep.prior_mean},
              {"prior_mode", rep.prior_mode},
              {"post_mean", rep.post_mean},
              {"post_mode", rep.post_mode},
              {"mean_direction", direction_name(rep.mean_direction)},
              {"mode_direction", direction_name(rep.mode_direction)},
              {"opposite", rep.opposite}};
}

json fit_result_to_json(const FitResult& fit, std::size_t clamped_count) {
  return json{{"a_hat", fit.a_hat},
              {"b_hat", fit.b_hat},
              {"ci_a", interval_to_json(fit.ci_a)},
              {"ci_b", interval_to_json(fit.ci_b)},
              {"loglik", fit.loglik},
              {"ell_rounded", fit.ell_rounded},
              {"q_rounded", fit.q_rounded},
              {"clamped", clamped_count}};
}

json quantify_result_to_json(const QuantifyResult& res,
                             const HyperParams& hyper, bool mass_condition) {
  return json{{"share", res.share},
              {"R", res.draws},
              {"seed", res.seed},
              {"params",
               {{"ell", hyper.ell},
                {"q", hyper.q},
                {"x_hat", res.x_hat},
                {"n", res.n},
                {"delta", res.delta},
                {"mass_condition", mass_condition}}}};
}

json regression_result_to_json(const RegressionResult& res) {
  return json{{"delta1", res.delta1},
              {"delta2", res.delta2},
              {"se2", res.se2},
              {"n_obs", res.n_obs}};
}

namespace {

json wave_to_json(const GroupWave& w) {
  return json{{"mean", w.mean},
              {"mode", w.mode},
              {"report", w.report},
              {"participates", w.participates}};
}

json group_to_json(const GroupOutcome& g) {
  return json{{"label", g.label},
              {"prior", wave_to_json(g.prior)},
              {"posterior", wave_to_json(g.posterior)}};
}

}  // namespace

json stylized_outcome_to_json(const StylizedOutcome& outcome) {
  json groups = json::array();
  for (const GroupOutcome& g : outcome.groups) groups.push_back(group_to_json(g));
  return json{{"groups", groups},
              {"naive_sc_verdict", verdict_name(outcome.naive_sc_verdict)}};
}

json split_outcome_to_json(const SplitOutcome& split) {
  return json{{"control", group_to_json(split.control)},
              {"treated", group_to_json(split.treated)}};
}

std::string direction_name(Direction d) {
  switch (d) {
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    case Direction::Unchanged: return "unchanged";
  }
  return "unchanged";
}

std::string mode_localization_name(ModeLocalization c) {
  switch (c) {
    case ModeLocalization::DiscreteSeparated: return "discrete_separated";
    case ModeLocalization::GlobalUnimodal: return "global_unimodal";
    case ModeLocalization::LocalUnimodal: return "local_unimodal";
    case ModeLocalization::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

std::string verdict_name(NaiveScVerdict v) {
  return v == NaiveScVerdict::RejectsSC ? "rejects_sc" : "consistent_with_sc";
}

std::string method_name(SolveMethod m) {
  return m == SolveMethod::Analytic ? "analytic" : "grid_search";
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_stylized_csv(std::ostream& out, const StylizedOutcome& outcome) {
  out << "group,statistic,prior,posterior\n";
  for (const GroupOutcome& g : outcome.groups) {
    out << g.label << ",mean," << format_number(g.prior.mean) << ','
        << format_number(g.posterior.mean) << '\n';
    out << g.label << ",mode," << format_number(g.prior.mode) << ','
        << format_number(g.posterior.mode) << '\n';
    out << g.label << ",report," << format_number(g.prior.report) << ','
        << format_number(g.posterior.report) << '\n';
    out << g.label << ",participates," << (g.prior.participates ? 1 : 0) << ','
        << (g.posterior.participates ? 1 : 0) << '\n';
  }
}

void write_panel_csv(std::ostream& out, const PanelData& panel) {
  out << "id,treated,prior_report,post_report,prior_mean,post_mean,"
         "participates\n";
  for (const AgentRow& r : panel.rows) {
    out << r.id << ',' << (r.treated ? 1 : 0) << ','
        << format_number(r.prior_report) << ',' << format_number(r.post_report)
        << ',' << format_number(r.prior_mean) << ','
        << format_number(r.post_mean) << ',' << (r.participates ? 1 : 0)
        << '\n';
  }
}

}  // namespace elicit
