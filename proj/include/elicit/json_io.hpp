#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "elicit/hierarchical.hpp"
#include "elicit/identification.hpp"
#include "elicit/schemes.hpp"
#include "elicit/stylized.hpp"
#include "elicit/updating.hpp"

namespace elicit {

// Wire formats:
//   distribution  {"type":"discrete","atoms":[[v,p],...]}
//                 {"type":"beta","alpha":a,"beta":b}
//   scheme        {"scheme":"window","delta":d,"bonus":w}
//                 {"scheme":"quadratic","a":a,"b":b}
//                 {"scheme":"absolute","a":a,"b":b}
//                 {"scheme":"no_incentive"}
//   signal        {"type":"binomial","x_hat":x,"n":n}
//                 {"type":"uniform","signal":s,"half_width":w}
// Parsers throw InvalidArgumentError (or a distribution/scheme invariant
// error) on malformed input.

nlohmann::json dist_to_json(const BeliefDistribution& dist);
BeliefDistribution dist_from_json(const nlohmann::json& j);

nlohmann::json scheme_to_json(const Scheme& scheme);
Scheme scheme_from_json(const nlohmann::json& j);

nlohmann::json signal_to_json(const SignalVariant& sig);
SignalVariant signal_from_json(const nlohmann::json& j);

nlohmann::json report_solution_to_json(const ReportSolution& sol);
nlohmann::json update_report_to_json(const UpdateReport& rep);
nlohmann::json fit_result_to_json(const FitResult& fit,
                                  std::size_t clamped_count);
nlohmann::json quantify_result_to_json(const QuantifyResult& res,
                                       const HyperParams& hyper,
                                       bool mass_condition);
nlohmann::json regression_result_to_json(const RegressionResult& res);
nlohmann::json stylized_outcome_to_json(const StylizedOutcome& outcome);
nlohmann::json split_outcome_to_json(const SplitOutcome& split);

std::string direction_name(Direction d);
std::string mode_localization_name(ModeLocalization c);
std::string verdict_name(NaiveScVerdict v);
std::string method_name(SolveMethod m);

/// Table of per-group prior/posterior statistics as CSV
/// (group,statistic,prior,posterior).
void write_stylized_csv(std::ostream& out, const StylizedOutcome& outcome);

/// Panel rows as CSV (id,treated,...,participates).
void write_panel_csv(std::ostream& out, const PanelData& panel);

/// Deterministic %.12g rendering used for all CSV numbers.
std::string format_number(double x);

}  // namespace elicit
