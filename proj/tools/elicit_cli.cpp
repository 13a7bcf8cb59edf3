// Command-line front end: every pipeline is reachable with file/inline JSON
// inputs, explicit seeds, and CSV/JSON outputs.
//
// Exit codes: 0 success, 2 input error (flags, JSON, files), 3 domain error
// (no best response, empty posterior, degenerate data, ...).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "elicit/defaults.hpp"
#include "elicit/json_io.hpp"
#include "elicit/special.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts either inline JSON (starts with '{') or a path to a JSON file.
json load_json_arg(const std::string& arg) {
  try {
    if (!arg.empty() && arg.front() == '{') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open `" + arg + "`");
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw InputError("cannot write `" + path + "`");
  return file;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_report(const std::string& dist_arg, const std::string& scheme_arg) {
  elicit::BeliefDistribution dist = elicit::dist_from_json(load_json_arg(dist_arg));
  elicit::Scheme scheme = elicit::scheme_from_json(load_json_arg(scheme_arg));

  const elicit::ReportSolution sol = elicit::optimal_report(scheme, dist);
  json out = elicit::report_solution_to_json(sol);
  if (const auto* w = std::get_if<elicit::WindowScheme>(&scheme))
    out["condition"] = elicit::mode_localization_name(
        elicit::classify_mode_localization(dist, w->delta));
  emit(out);
  return kExitOk;
}

int cmd_update(const std::string& prior_arg, const std::string& signal_arg) {
  elicit::BeliefDistribution prior =
      elicit::dist_from_json(load_json_arg(prior_arg));
  elicit::SignalVariant signal =
      elicit::signal_from_json(load_json_arg(signal_arg));

  if (const auto* beta = std::get_if<elicit::BetaBelief>(&prior)) {
    const auto* sig = std::get_if<elicit::BinomialSignal>(&signal);
    if (!sig)
      throw InputError("beta priors update on binomial signals");
    const elicit::UpdateReport rep = elicit::opposite_direction(*beta, *sig);
    json out = elicit::update_report_to_json(rep);
    out["posterior"] =
        elicit::dist_to_json(elicit::beta_binomial_update(*beta, *sig));
    emit(out);
    return kExitOk;
  }
  const auto& disc = std::get<elicit::DiscreteBelief>(prior);
  const auto* sig = std::get_if<elicit::UniformSignal>(&signal);
  if (!sig)
    throw InputError("discrete priors update on uniform signals");
  const elicit::DiscreteBelief post = elicit::uniform_window_update(disc, *sig);
  json out;
  out["posterior"] = elicit::dist_to_json(post);
  out["prior_mean"] = elicit::mean(disc);
  out["post_mean"] = elicit::mean(post);
  emit(out);
  return kExitOk;
}

int cmd_stylized(const std::string& csv_path, const std::string& json_path,
                 const std::string& scheme_arg) {
  const auto groups = elicit::default_groups();
  const auto signal = elicit::default_signal();
  const elicit::StylizedOutcome outcome =
      scheme_arg.empty()
          ? elicit::run_stylized(groups, signal)
          : elicit::run_stylized(groups, signal,
                                 elicit::scheme_from_json(load_json_arg(scheme_arg)));

  std::ofstream csv_file;
  elicit::write_stylized_csv(open_or_stdout(csv_file, csv_path), outcome);

  json verdicts = elicit::stylized_outcome_to_json(outcome);
  for (const auto& g : groups) {
    const elicit::SplitOutcome split = elicit::control_treatment_split(g, signal);
    verdicts["splits"].push_back(elicit::split_outcome_to_json(split));
  }
  if (json_path.empty() || json_path == "-") {
    emit(verdicts);
  } else {
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write `" + json_path + "`");
    out << verdicts.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_fit(const std::string& data_path) {
  std::ifstream in(data_path);
  if (!in) throw InputError("cannot open `" + data_path + "`");
  const elicit::ModeDataset data = elicit::load_mode_dataset_csv(in);
  const elicit::FitResult fit = elicit::fit_mle(data);
  emit(elicit::fit_result_to_json(fit, data.clamped_count));
  return kExitOk;
}

int cmd_quantify(double ell, double q, std::uint64_t seed, std::size_t draws,
                 double x_hat, double n, double delta, bool no_mass_condition) {
  const elicit::HyperParams hyper{ell, q};
  const elicit::BinomialSignal sig{x_hat, n};
  const elicit::QuantifyResult res = elicit::quantify_opposite_share(
      hyper, sig, delta, draws, seed, !no_mass_condition);
  emit(elicit::quantify_result_to_json(res, hyper, !no_mass_condition));
  return kExitOk;
}

elicit::ExperimentConfig build_identify_config(
    const std::string& population_arg, const std::string& scheme_arg,
    const std::string& signal_arg, std::uint64_t seed, std::size_t agents,
    double treated_share, double cost) {
  elicit::ExperimentConfig cfg = elicit::stylized_experiment_config(seed, agents);
  cfg.treated_share = treated_share;
  cfg.cost = cost;

  if (population_arg != "stylized") {
    const json j = load_json_arg(population_arg);
    const std::string type =
        j.contains("type") && j.at("type").is_string() ? j.at("type") : "";
    if (type == "hyper") {
      if (!j.contains("ell") || !j.contains("q"))
        throw InputError("hyper population needs `ell` and `q`");
      cfg.population =
          elicit::HyperParams{j.at("ell").get<double>(), j.at("q").get<double>()};
      cfg.signal = elicit::BinomialSignal{};  // unless overridden below
    } else if (type == "list") {
      if (!j.contains("beliefs") || !j.at("beliefs").is_array() ||
          j.at("beliefs").empty())
        throw InputError("list population needs a nonempty `beliefs` array");
      std::vector<elicit::BeliefDistribution> beliefs;
      for (const json& d : j.at("beliefs"))
        beliefs.push_back(elicit::dist_from_json(d));
      cfg.population = std::move(beliefs);
    } else {
      throw InputError("population type must be `hyper` or `list`");
    }
  }
  if (!scheme_arg.empty())
    cfg.scheme = elicit::scheme_from_json(load_json_arg(scheme_arg));
  if (!signal_arg.empty())
    cfg.signal = elicit::signal_from_json(load_json_arg(signal_arg));
  return cfg;
}

int cmd_identify(const elicit::ExperimentConfig& cfg,
                 const std::string& regressor_name,
                 const std::string& panel_path, bool sign_flip) {
  if (sign_flip) {
    const elicit::SignFlipResult res = elicit::sign_flip_demo(cfg);
    json out;
    out["window"] = elicit::regression_result_to_json(res.window);
    out["window"]["regressor"] = "report_change";
    out["quadratic"] = elicit::regression_result_to_json(res.quadratic);
    out["quadratic"]["regressor"] = "post_report";
    emit(out);
    return kExitOk;
  }

  elicit::Regressor regressor;
  if (regressor_name == "post_report")
    regressor = elicit::Regressor::PostReport;
  else if (regressor_name == "report_change")
    regressor = elicit::Regressor::ReportChange;
  else
    throw InputError("regressor must be post_report or report_change");

  const elicit::PanelData panel = elicit::simulate_experiment(cfg);
  if (!panel_path.empty()) {
    std::ofstream out(panel_path);
    if (!out) throw InputError("cannot write `" + panel_path + "`");
    elicit::write_panel_csv(out, panel);
  }
  json out = elicit::regression_result_to_json(elicit::estimate(panel, regressor));
  out["regressor"] = regressor_name;
  emit(out);
  return kExitOk;
}

int cmd_figure1(const std::string& csv_path, const std::string& sidecar_path) {
  const elicit::BetaBelief calibrated(1.5, 4.0);

  std::ofstream csv_file;
  std::ostream& out = open_or_stdout(csv_file, csv_path);
  out << "x,density\n";
  for (int i = 0; i <= 1000; ++i) {
    const double x = static_cast<double>(i) / 1000.0;
    out << elicit::format_number(x) << ','
        << elicit::format_number(elicit::pdf(calibrated, x)) << '\n';
  }

  const json sidecar = {{"mode", elicit::mode(calibrated)},
                        {"mean", elicit::mean(calibrated)},
                        {"intervention", elicit::defaults::kInterventionShare}};
  if (sidecar_path.empty() || sidecar_path == "-") {
    emit(sidecar);
  } else {
    std::ofstream side(sidecar_path);
    if (!side) throw InputError("cannot write `" + sidecar_path + "`");
    side << sidecar.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_defaults() {
  emit(json{{"delta", elicit::defaults::kWindowHalfWidth},
            {"bonus", elicit::defaults::kBonus},
            {"x_hat", elicit::defaults::kInterventionShare},
            {"n", elicit::defaults::kInterventionSampleSize},
            {"R", elicit::defaults::kDrawCount},
            {"cost", elicit::defaults::kParticipationCost},
            {"signal_half_width", elicit::defaults::kSignalHalfWidth}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief elicitation incentive toolkit"};
  app.require_subcommand(1);

  // report
  auto* report = app.add_subcommand(
      "report", "profit-maximizing report for a belief distribution");
  std::string rep_dist, rep_scheme;
  report->add_option("--dist", rep_dist, "distribution (path or inline JSON)")
      ->required();
  report->add_option("--scheme", rep_scheme, "scheme (path or inline JSON)")
      ->required();

  // update
  auto* update = app.add_subcommand("update", "Bayesian belief update");
  std::string upd_prior, upd_signal;
  update->add_option("--prior", upd_prior, "prior (path or inline JSON)")
      ->required();
  update->add_option("--signal", upd_signal, "signal (path or inline JSON)")
      ->required();

  // stylized
  auto* stylized = app.add_subcommand(
      "stylized", "two-group protest example: summary table and verdicts");
  std::string sty_csv, sty_json, sty_scheme;
  stylized->add_option("--csv", sty_csv, "table CSV output path (default stdout)");
  stylized->add_option("--json", sty_json, "verdict JSON output path (default stdout)");
  stylized->add_option("--scheme", sty_scheme,
                       "override the per-group window scheme");

  // fit
  auto* fit = app.add_subcommand("fit", "fit Beta shapes to reported modes");
  std::string fit_data;
  fit->add_option("--data", fit_data, "CSV with a `report` header")->required();

  // quantify
  auto* quantify = app.add_subcommand(
      "quantify", "Monte Carlo share of opposite-direction updaters");
  double qt_ell = 1.0, qt_q = 3.0;
  std::uint64_t qt_seed = 0;
  std::size_t qt_draws = elicit::defaults::kDrawCount;
  double qt_xhat = elicit::defaults::kInterventionShare;
  double qt_n = elicit::defaults::kInterventionSampleSize;
  double qt_delta = elicit::defaults::kWindowHalfWidth;
  bool qt_no_mass = false;
  quantify->add_option("--ell", qt_ell, "chi-squared d.o.f. for alpha-1");
  quantify->add_option("--q", qt_q, "chi-squared d.o.f. for beta-1");
  quantify->add_option("--seed", qt_seed, "RNG seed")->required();
  quantify->add_option("--draws", qt_draws, "number of draws R");
  quantify->add_option("--x-hat", qt_xhat, "intervention proportion");
  quantify->add_option("--n", qt_n, "intervention sample size");
  quantify->add_option("--delta", qt_delta, "window half-width");
  quantify->add_flag("--no-mass-condition", qt_no_mass,
                     "drop the window-mass comparison");

  // identify
  auto* identify = app.add_subcommand(
      "identify", "simulate an experiment and estimate the belief slope");
  std::string id_population = "stylized", id_scheme, id_signal,
              id_regressor = "post_report", id_panel;
  std::uint64_t id_seed = 0;
  std::size_t id_agents = 40;
  double id_share = 0.5, id_cost = elicit::defaults::kParticipationCost;
  bool id_sign_flip = false;
  identify->add_option("--population", id_population,
                       "`stylized`, or population JSON (path or inline)");
  identify->add_option("--scheme", id_scheme, "scheme (path or inline JSON)");
  identify->add_option("--signal", id_signal, "signal (path or inline JSON)");
  identify->add_option("--seed", id_seed, "RNG seed")->required();
  identify->add_option("--agents", id_agents, "number of agents");
  identify->add_option("--treated-share", id_share, "treated fraction");
  identify->add_option("--cost", id_cost, "participation cost");
  identify->add_option("--regressor", id_regressor,
                       "post_report or report_change");
  identify->add_option("--panel-out", id_panel, "panel CSV output path");
  identify->add_flag("--sign-flip", id_sign_flip,
                     "run both schemes and report both slopes");

  // figure1
  auto* figure1 = app.add_subcommand(
      "figure1", "calibrated Beta(1.5,4) density grid with summary sidecar");
  std::string fig_csv, fig_sidecar;
  figure1->add_option("--out", fig_csv, "density CSV path (default stdout)");
  figure1->add_option("--sidecar", fig_sidecar, "sidecar JSON path (default stdout)");

  // defaults
  app.add_subcommand("defaults", "print the benchmark experiment parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (report->parsed()) return cmd_report(rep_dist, rep_scheme);
    if (update->parsed()) return cmd_update(upd_prior, upd_signal);
    if (stylized->parsed()) return cmd_stylized(sty_csv, sty_json, sty_scheme);
    if (fit->parsed()) return cmd_fit(fit_data);
    if (quantify->parsed())
      return cmd_quantify(qt_ell, qt_q, qt_seed, qt_draws, qt_xhat, qt_n,
                          qt_delta, qt_no_mass);
    if (identify->parsed())
      return cmd_identify(
          build_identify_config(id_population, id_scheme, id_signal, id_seed,
                                id_agents, id_share, id_cost),
          id_regressor, id_panel, id_sign_flip);
    if (figure1->parsed()) return cmd_figure1(fig_csv, fig_sidecar);
    return cmd_defaults();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const elicit::InvalidArgumentError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const elicit::InvalidDistributionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const elicit::Error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
