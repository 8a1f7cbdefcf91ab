// Copyright 2026 The coopeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coopeq/cooperative.hpp"
#include "coopeq/errors.hpp"
#include "coopeq/fehr_schmidt.hpp"
#include "coopeq/game_io.hpp"
#include "coopeq/parametric.hpp"
#include "coopeq/records_io.hpp"
#include "coopeq/report.hpp"
#include "coopeq/stats.hpp"

namespace coopeq::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string agg = "linear";
  double tol = kDefaultTolerance;
  std::uint64_t seed = 42;
  bool json = false;
  std::string out_path;
};

std::string num(double v) { return format_number(v); }

std::string num(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("n/a");
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ", ";
    s += num(values[k]);
  }
  return s;
}

// Prints `text` or the JSON document, and writes the JSON to --out.
void emit(const GlobalOptions& g, std::ostream& out, const std::string& text,
          const json& doc) {
  if (g.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
  if (!g.out_path.empty()) {
    std::ofstream file(g.out_path);
    if (!file) throw ParseError("cannot write " + g.out_path);
    file << doc.dump(2) << '\n';
  }
}

int cmd_solve(const GlobalOptions& g, const std::string& path,
              std::size_t purify_samples, std::ostream& out) {
  const Game game = load_game(path);
  require_valid(game);
  const auto aggs =
      uniform_aggravation(parse_aggravation(g.agg), game.num_players());
  const CooperativeResult result = cooperative_equilibria(game, aggs, g.tol);
  const SolveReport report = make_solve_report(game, aggs, g.tol, result);
  json doc = to_json(report);

  std::ostringstream text;
  for (const auto& p : report.partition_values) {
    text << "structure " << p.label << (p.exhaustive ? "" : " (pure equilibria)")
         << "\n";
    for (const auto& v : p.players) {
      text << "  " << std::left << std::setw(12) << v.player
           << " e_stay=" << num(v.e_stay) << " e_dev=" << num(v.e_dev)
           << " I_opp=" << num(v.incentive) << " L_opp=" << num(v.loss)
           << " tau_stay=" << num(v.tau_stay) << " tau_dev=" << num(v.tau_dev)
           << " value=" << num(v.value) << "\n";
    }
  }
  text << "p* = " << report.p_star->label << "\n";
  text << "floor = (" << join(report.induced_floor) << ")\n";
  text << (result.approximate ? "approximate cooperative equilibrium (epsilon " +
                                    num(result.epsilon) + "):\n"
                              : "cooperative equilibria:\n");
  for (const auto& e : report.cooperative_equilibria) {
    text << "  ";
    if (e.profile) {
      text << "(";
      for (std::size_t i = 0; i < e.profile->size(); ++i) {
        text << (i ? "," : "") << (*e.profile)[i];
      }
      text << ")";
    } else {
      text << "mixed";
    }
    text << " payoffs (" << join(e.payoffs) << ")";
    if (!e.mixed_certified) {
      text << " [feasible mixed deviation gains " << num(e.max_mixed_gain)
           << "]";
    }
    text << "\n";
  }

  if (purify_samples > 0) {
    const InducedGame induced(game, result.floor, g.tol);
    const auto diag =
        check_purifiable(induced.restricted_game(), purify_samples, g.seed, g.tol);
    text << "purifiability: " << diag.violations.size() << " violations in "
         << diag.samples << " samples (seed " << g.seed << ")\n";
    doc["purifiability"] = {{"samples", diag.samples},
                            {"seed", g.seed},
                            {"violations", diag.violations.size()}};
  }
  emit(g, out, text.str(), doc);
  return kExitOk;
}

int cmd_validate(const GlobalOptions& g, const std::string& path,
                 std::ostream& out) {
  const Game game = load_game(path);
  const auto issues = validate(game);
  std::ostringstream text;
  if (issues.empty()) {
    text << "ok: " << game.num_players() << " players, " << game.num_profiles()
         << " profiles\n";
  }
  for (const auto& issue : issues) text << "error: " << issue << "\n";
  emit(g, out, text.str(), {{"valid", issues.empty()}, {"issues", issues}});
  return issues.empty() ? kExitOk : kExitInput;
}

int cmd_ug(const GlobalOptions& g, double budget, const std::string& agg_p,
           const std::string& agg_r, std::optional<double> tau,
           std::optional<double> donation, std::ostream& out) {
  const UgSolution s = ug_solution(budget, parse_aggravation(agg_p),
                                   parse_aggravation(agg_r), tau, g.tol);
  std::optional<OfferPrediction> prediction;
  if (donation) {
    prediction = ug_predict_offer(budget, s.x_star, s.tau_stay, *donation);
  }
  std::ostringstream text;
  text << "x* = " << num(s.x_star) << "\n"
       << "tau_stay = " << num(s.tau_stay)
       << (s.tau_source == TauSource::kUserSupplied ? " (given)" : "") << "\n"
       << "v_proposer = " << num(s.v_proposer) << "\n"
       << "v_recipient = " << num(s.v_recipient) << "\n"
       << "induced dictator game: b_D = " << num(s.b_dictator)
       << ", b_R = " << num(s.b_recipient) << "\n"
       << "donation cap = " << num(s.donation_cap) << "\n"
       << "offer = " << num(s.offer) << "\n";
  if (prediction) {
    text << "predicted offer with donation " << num(*donation) << " = "
         << num(prediction->offer) << "\n";
    if (prediction->cap_exceeded) {
      text << "warning: donation exceeds the cap " << num(prediction->cap)
           << "\n";
    }
  }
  emit(g, out, text.str(), to_json(s, prediction));
  return kExitOk;
}

int cmd_nbp(const GlobalOptions& g, double budget, const std::string& agg_p,
            const std::string& agg_r, std::ostream& out) {
  const NbpSolution s = nbp_solution(budget, parse_aggravation(agg_p),
                                     parse_aggravation(agg_r), g.tol);
  std::ostringstream text;
  text << "x* = " << num(s.x_star) << "\n"
       << "claims = (" << num(s.claims[0]) << ", " << num(s.claims[1]) << ")\n";
  emit(g, out, text.str(), to_json(s));
  return kExitOk;
}

int cmd_fs(const GlobalOptions& g, double budget, std::ostream& out) {
  const auto rows = belief_rows(budget);
  std::ostringstream text;
  text << std::left << std::setw(8) << "alpha" << std::setw(8) << "beta"
       << std::setw(10) << "donation" << "offer\n";
  for (const auto& r : rows) {
    text << std::setw(8) << num(r.belief.alpha) << std::setw(8)
         << num(r.belief.beta) << std::setw(10) << num(r.donation)
         << num(r.offer) << "\n";
  }
  emit(g, out, text.str(), {{"budget", budget}, {"rows", to_json(rows)}});
  return kExitOk;
}

void print_report(std::ostream& text, const std::string& name,
                  const TreatmentReport& r) {
  text << "  " << std::left << std::setw(10) << name << "n=" << r.n
       << " mean_offer=" << num(r.mean_offer)
       << " mean_donation=" << num(r.mean_donation) << " rho=";
  if (r.spearman) {
    text << num(r.spearman->rho) << " (p=" << num(r.spearman->p_value) << ")";
  } else {
    text << "n/a";
  }
  text << " fit=";
  if (r.fit) {
    text << "(" << num(r.fit->c0) << ", " << num(r.fit->c1) << ")";
  } else {
    text << "n/a";
  }
  text << " mse_fitting=" << num(r.mse_fitting)
       << " mse_model=" << num(r.mse_model)
       << " exact=" << r.exact_predictions
       << " inconsistent=" << r.inconsistent << "\n";
  for (const auto& d : r.degenerate) text << "    degenerate " << d << "\n";
}

struct StatsOptions {
  double equal_split = kEqualSplit;
  double zero = kZeroDonation;
  double model_c0 = kModelIntercept;
  double model_c1 = kModelSlope;
  bool compare = false;
  bool one_sided = false;
};

int cmd_stats(const GlobalOptions& g, const std::string& path,
              const StatsOptions& o, std::ostream& out) {
  const auto records = load_records(path);
  const auto groups = group_by_treatment(records);
  std::ostringstream text;
  json doc = {{"treatments", json::array()}};
  for (const auto& group : groups) {
    const auto analysis = analyze_treatment(group.records, o.model_c0,
                                            o.model_c1, o.equal_split, o.zero);
    text << "treatment " << group.treatment << " (removed " << analysis.removed
         << ")\n";
    print_report(text, "all", analysis.all);
    print_report(text, "filtered", analysis.filtered);
    doc["treatments"].push_back(to_json(group.treatment, analysis));
  }
  if (groups.size() >= 2) {
    std::vector<double> a, b;
    for (const auto& r : groups[0].records) a.push_back(r.dg_donation);
    for (const auto& r : groups[1].records) b.push_back(r.dg_donation);
    const auto w = wilcoxon_rank_sum(
        a, b, o.one_sided ? Alternative::kGreater : Alternative::kTwoSided);
    text << "donations " << groups[0].treatment << " vs "
         << groups[1].treatment << ": rank sum " << num(w.statistic)
         << ", p = " << num(w.p_value)
         << (o.one_sided ? " (one-sided)" : " (two-sided)") << "\n";
    doc["wilcoxon"] = {{"treatments", {groups[0].treatment, groups[1].treatment}},
                       {"statistic", w.statistic},
                       {"p_value", w.p_value},
                       {"exact", w.exact},
                       {"one_sided", o.one_sided}};
  }
  if (o.compare) {
    text << "paper-reported (not verified):\n";
    json rows = json::array();
    for (const auto& r : reference_rows()) {
      text << "  treatment " << r.treatment << " " << std::setw(9) << r.subset
           << " mean_offer=" << num(r.mean_offer)
           << " mean_donation=" << num(r.mean_donation)
           << " rho=" << num(r.rho) << " fit=(" << num(r.c0) << ", "
           << num(r.c1) << ") mse_fitting=" << num(r.mse_fitting)
           << " mse_model=" << num(r.mse_model) << "\n";
      rows.push_back({{"treatment", r.treatment},
                      {"subset", r.subset},
                      {"mean_offer", r.mean_offer},
                      {"mean_donation", r.mean_donation},
                      {"rho", r.rho},
                      {"c0", r.c0},
                      {"c1", r.c1},
                      {"mse_fitting", r.mse_fitting},
                      {"mse_model", r.mse_model}});
    }
    text << "  donations 1 vs 2 rank-sum p=" << num(kReferenceDonationRankSumP)
         << "\n";
    doc["paper_reported_not_verified"] = {
        {"treatments", rows},
        {"donation_rank_sum_p", kReferenceDonationRankSumP}};
  }
  emit(g, out, text.str(), doc);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cooperative equilibria of finite games"};
  app.name("coopeq");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--agg", g.agg, "Aggravation: linear, sqrt or scaled:<c>");
  app.add_option("--tol", g.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized diagnostics");
  app.add_flag("--json", g.json, "Print the JSON report");
  app.add_option("--out", g.out_path, "Write the JSON report to a file");

  std::string game_path;
  std::size_t purify = 0;
  auto* solve = app.add_subcommand("solve", "Cooperative equilibria of a game file");
  solve->add_option("game", game_path, "Game JSON file")->required();
  solve->add_option("--purify", purify,
                    "Check purifiability of the induced game with N samples");

  auto* check = app.add_subcommand("validate", "Check a game file");
  check->add_option("game", game_path, "Game JSON file")->required();

  double ug_budget = 40.0, nbp_budget = 1.0, fs_budget = 40.0;
  std::string agg_p, agg_r;
  std::optional<double> tau, donation;
  auto* ug = app.add_subcommand("ug", "Closed-form Ultimatum Game solution");
  ug->add_option("--budget", ug_budget, "Budget b")->capture_default_str();
  ug->add_option("--agg-proposer", agg_p, "Proposer aggravation");
  ug->add_option("--agg-recipient", agg_r, "Recipient aggravation");
  ug->add_option("--tau", tau, "Recipient's probability that the proposer stays");
  ug->add_option("--donation", donation, "Observed dictator donation");

  auto* nbp = app.add_subcommand("nbp", "Closed-form Nash Bargaining solution");
  nbp->add_option("--budget", nbp_budget, "Budget b")->capture_default_str();
  nbp->add_option("--agg-proposer", agg_p, "First claimant's aggravation");
  nbp->add_option("--agg-recipient", agg_r, "Second claimant's aggravation");

  auto* fs = app.add_subcommand("fs", "Inequity-aversion comparison table");
  fs->add_option("--budget", fs_budget, "Ultimatum budget b")
      ->capture_default_str();

  std::string csv_path;
  StatsOptions so;
  auto* stats = app.add_subcommand("stats", "Offer/donation analysis of a CSV");
  stats->add_option("records", csv_path, "Subject CSV")->required();
  stats->add_option("--equal-split", so.equal_split, "Equal-split offer (cents)");
  stats->add_option("--zero", so.zero, "Zero donation (cents)");
  stats->add_option("--model-c0", so.model_c0, "Model intercept");
  stats->add_option("--model-c1", so.model_c1, "Model slope");
  stats->add_flag("--compare-paper", so.compare,
                  "Print published reference values beside the results");
  stats->add_flag("--one-sided", so.one_sided,
                  "One-sided donation comparison (first treatment larger)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (agg_p.empty()) agg_p = g.agg;
  if (agg_r.empty()) agg_r = g.agg;
  try {
    if (solve->parsed()) return cmd_solve(g, game_path, purify, out);
    if (check->parsed()) return cmd_validate(g, game_path, out);
    if (ug->parsed()) return cmd_ug(g, ug_budget, agg_p, agg_r, tau, donation, out);
    if (nbp->parsed()) return cmd_nbp(g, nbp_budget, agg_p, agg_r, out);
    if (fs->parsed()) return cmd_fs(g, fs_budget, out);
    if (stats->parsed()) return cmd_stats(g, csv_path, so, out);
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace coopeq::cli
