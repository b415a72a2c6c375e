// Copyright 2026 The Caudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "caudit/dsl.hpp"
#include "caudit/engine.hpp"
#include "caudit/error.hpp"
#include "caudit/report.hpp"

namespace {

using namespace caudit;

constexpr int kExitHolds = 0;
constexpr int kExitError = 1;
constexpr int kExitFails = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::kInvalidParameter, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParsedModel load_model(const std::string& path) {
  return parse_model(read_file(path), ModelLimits::from_env());
}

const AnalysisFrame& analysis_or_die(const ParsedModel& m) {
  if (const auto* f = std::get_if<AnalysisFrame>(&m)) return *f;
  fail(Errc::kInvalidParameter,
       "this property needs a frame model, but the file declares a dbframe");
}

const DatabaseFrame& database_or_die(const ParsedModel& m) {
  if (const auto* f = std::get_if<DatabaseFrame>(&m)) return *f;
  fail(Errc::kInvalidParameter,
       "differential privacy needs a dbframe model, but the file declares a frame");
}

// Accepts p/q, a bare integer, or a decimal like 0.75 (converted exactly).
Rational parse_number(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational::parse(text);
  const std::string whole = dot == 0 ? "0" : text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty()) return Rational::parse(whole);
  Rational denom(1);
  for (size_t i = 0; i < frac.size(); ++i) denom *= Rational(10);
  return Rational::parse(whole) + Rational::parse(frac) / denom;
}

// The bound every check runs at: a rational ratio k, or a conservative
// rational upper bound on e^eps when asked for explicitly. Floating point
// never decides a verdict.
std::optional<Rational> resolve_bound(const std::optional<std::string>& bound_text,
                                      const std::optional<std::string>& eps_text,
                                      const std::string& eps_mode) {
  if (bound_text && eps_text) {
    fail(Errc::kInvalidParameter, "give either --bound or --eps, not both");
  }
  if (bound_text) return Rational::parse(*bound_text);
  if (!eps_text) return std::nullopt;
  if (eps_mode != "approx") {
    fail(Errc::kInvalidParameter,
         "--eps would need the irrational e^eps; pass --eps-mode approx to use "
         "a conservative rational upper bound, or give --bound p/q directly");
  }
  return exp_upper_bound(parse_number(*eps_text));
}

// Metric file: one 'value value p/q' triple per line, '#' comments.
MetricBounds load_metric(const std::string& path) {
  MetricBounds metric;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string x, y, k;
    if (!(fields >> x)) continue;  // blank line
    if (!(fields >> y >> k)) {
      fail(Errc::kInvalidMetric,
           "metric line " + std::to_string(lineno) + ": need 'value value p/q'");
    }
    metric.set(x, y, Rational::parse(k));
  }
  return metric;
}

void emit(const PropertyReport& report, bool json) {
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << report_text(report);
  }
}

int run_check(const std::string& model_path, const std::string& property,
              std::optional<Rational> bound, const std::string& positive,
              const std::string& metric_path, bool json, bool measure_only) {
  const ParsedModel model = load_model(model_path);

  PropertyReport report;
  if (property == "noninterference") {
    const AnalysisFrame& f = analysis_or_die(model);
    report = measure_only ? measure_noninterference(f)
             : bound      ? check_noninterference_at(f, *bound)
                          : check_noninterference(f);
  } else if (property == "causal") {
    const AnalysisFrame& f = analysis_or_die(model);
    report = measure_only
                 ? measure_causal_irrelevance(f)
                 : check_causal_irrelevance(f, bound.value_or(Rational(1)));
  } else if (property == "assoc") {
    const AnalysisFrame& f = analysis_or_die(model);
    report = measure_only
                 ? measure_assoc_independence(f)
                 : check_assoc_independence(f, bound.value_or(Rational(1)));
  } else if (property == "assoc-x") {
    const AnalysisFrame& f = analysis_or_die(model);
    report = measure_only
                 ? measure_assoc_independence_on_x(f)
                 : check_assoc_independence_on_x(f, bound.value_or(Rational(1)));
  } else if (property == "dp") {
    const DatabaseFrame& f = database_or_die(model);
    report = measure_only
                 ? measure_differential_privacy(f)
                 : check_differential_privacy(f, bound.value_or(Rational(1)));
  } else if (property == "rule80") {
    if (positive.empty()) {
      fail(Errc::kInvalidParameter, "rule80 needs --positive OUTCOME");
    }
    report = check_80_rule(analysis_or_die(model), positive);
  } else if (property == "lipschitz") {
    if (metric_path.empty()) {
      fail(Errc::kInvalidParameter, "lipschitz needs --metric FILE");
    }
    report = check_lipschitz(analysis_or_die(model), load_metric(metric_path));
  } else {
    fail(Errc::kInvalidParameter,
         "unknown property '" + property +
             "' (use noninterference, causal, assoc, assoc-x, dp, rule80, or "
             "lipschitz)");
  }
  emit(report, json);
  if (measure_only) return kExitHolds;
  return report.holds ? kExitHolds : kExitFails;
}

int run_witness(const std::string& model_path, const std::string& phi_text,
                bool diversity, const std::string& output_value, bool json) {
  const ParsedModel model = load_model(model_path);
  const AnalysisFrame& f = analysis_or_die(model);
  const Proposition phi = parse_proposition(phi_text);
  const ImpossibilityClassification classified = classify_impossibility(f, phi);

  nlohmann::json doc;
  doc["classification"] = to_json(classified);
  std::ostringstream text;
  text << classification_text(classified);

  if (const auto witness = disclosure_witness(f, phi)) {
    doc["disclosure"] = to_json(*witness);
    text << "disclosure witness:\n  background: " << witness->background.str()
         << "\n  output: " << witness->output << "\n  before: open (mass "
         << witness->before.mass.frac_str() << "), after: closed (mass "
         << witness->after.mass.frac_str() << ")\n";
    if (diversity) {
      const DiversityLossRecord record = diversity_report(
          f, phi, output_value.empty() ? witness->output : output_value);
      doc["diversity"] = to_json(record);
      text << "diversity loss: subpopulation " << record.subpopulation.str()
           << " (mass " << record.subpopulation_mass.frac_str()
           << ") keeps some diversity of phi, its output=" << record.output
           << " part loses it entirely\n";
    }
  } else {
    doc["disclosure"] = nlohmann::json();
    text << "no forced disclosure (phi settled a priori or system uninformative)\n";
  }

  std::cout << (json ? doc.dump(2) + "\n" : text.str());
  return kExitHolds;
}

int run_theorems(long trials, uint64_t seed, const std::string& grid, bool json) {
  if (trials < 1) fail(Errc::kInvalidParameter, "--trials must be at least 1");
  CampaignReport report;
  if (grid == "default") {
    report = run_default_campaign(seed, trials);
  } else if (grid == "full") {
    report = run_campaign(full_grid(seed), trials);
  } else {
    fail(Errc::kInvalidParameter, "--grid must be default or full");
  }
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << campaign_summary(report);
  }
  const bool ok = report.violations.empty() && report.all_expected_findings();
  return ok ? kExitHolds : kExitFails;
}

int run_prob(const std::string& model_path, const std::string& phi_text,
             const std::string& given_text, const std::string& do_text, bool json) {
  const ParsedModel model = load_model(model_path);
  const ProbCausalModel& pm = parsed_pm(model);
  QueryContext ctx;
  if (!do_text.empty()) {
    std::vector<std::pair<std::string, std::string>> assignments;
    std::istringstream in(do_text);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        fail(Errc::kInvalidParameter, "--do expects VAR=value[,VAR=value...]");
      }
      assignments.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    ctx.interventions = Intervention::of(pm.model, assignments);
  }
  if (!given_text.empty()) ctx.condition = parse_proposition(given_text);
  const Rational p = probability(pm, ctx, parse_proposition(phi_text));
  if (json) {
    nlohmann::json doc;
    doc["prob"] = p.frac_str();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << p.frac_str() << "\n";
  }
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"caudit: exact causal and associative privacy/nondiscrimination "
               "checks for finite probabilistic causal models"};
  app.require_subcommand(1);

  std::string model_path, property, positive, metric_path, phi_text;
  std::string given_text, do_text, grid = "default", eps_mode;
  std::optional<std::string> bound_text, eps_text;
  bool json = false, diversity = false;
  std::string output_value;
  long trials = 1000;
  uint64_t seed = 0;

  CLI::App* check = app.add_subcommand("check", "decide a property at a bound");
  check->add_option("model", model_path, "model file")->required();
  check->add_option("property", property,
                    "noninterference|causal|assoc|assoc-x|dp|rule80|lipschitz")
      ->required();
  check->add_option("--positive", positive, "positive outcome for rule80");
  check->add_option("--metric", metric_path, "per-pair bound file for lipschitz");
  check->add_option("--bound", bound_text, "ratio bound k = e^eps as p/q");
  check->add_option("--eps", eps_text, "epsilon; needs --eps-mode approx");
  check->add_option("--eps-mode", eps_mode,
                    "approx: use a conservative rational upper bound on e^eps");
  check->add_flag("--json", json, "emit the structured report");

  CLI::App* measure = app.add_subcommand("measure", "tightest exact ratio");
  measure->add_option("model", model_path, "model file")->required();
  measure->add_option("property", property,
                      "noninterference|causal|assoc|assoc-x|dp")
      ->required();
  measure->add_flag("--json", json, "emit the structured report");

  CLI::App* witness = app.add_subcommand(
      "witness", "classify a proposition and construct disclosure witnesses");
  witness->add_option("model", model_path, "model file")->required();
  witness->add_option("phi", phi_text, "proposition of interest")->required();
  witness->add_flag("--diversity", diversity,
                    "also print the diversity-loss reading");
  witness->add_option("--output", output_value,
                      "output value for the diversity report");
  witness->add_flag("--json", json, "emit the structured report");

  CLI::App* theorems =
      app.add_subcommand("theorems", "run the seeded theorem campaign");
  theorems->add_option("--trials", trials, "checked trials per theorem");
  theorems->add_option("--seed", seed, "campaign seed");
  theorems->add_option("--grid", grid, "default|full");
  theorems->add_flag("--json", json, "emit the structured report");

  CLI::App* prob = app.add_subcommand("prob", "one exact probability query");
  prob->add_option("model", model_path, "model file")->required();
  prob->add_option("--phi", phi_text, "event proposition")->required();
  prob->add_option("--given", given_text, "conditioning proposition");
  prob->add_option("--do", do_text, "interventions VAR=value[,...]");
  prob->add_flag("--json", json, "emit JSON");

  CLI::App* print = app.add_subcommand(
      "print", "parse a model and reprint it in canonical form");
  print->add_option("model", model_path, "model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (check->parsed()) {
      return run_check(model_path, property,
                       resolve_bound(bound_text, eps_text, eps_mode), positive,
                       metric_path, json, /*measure_only=*/false);
    }
    if (measure->parsed()) {
      return run_check(model_path, property, std::nullopt, positive, metric_path,
                       json, /*measure_only=*/true);
    }
    if (witness->parsed()) {
      return run_witness(model_path, phi_text, diversity, output_value, json);
    }
    if (theorems->parsed()) return run_theorems(trials, seed, grid, json);
    if (prob->parsed()) {
      return run_prob(model_path, phi_text, given_text, do_text, json);
    }
    if (print->parsed()) {
      std::cout << print_model(load_model(model_path));
      return kExitHolds;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
