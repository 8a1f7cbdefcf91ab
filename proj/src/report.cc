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

#include "coopeq/report.hpp"

#include "coopeq/errors.hpp"

namespace coopeq {

using nlohmann::json;

namespace {

SolveReport::Partition partition_entry(const Game& game,
                                       const PartitionValues& pv) {
  SolveReport::Partition out;
  out.label = pv.partition.describe();
  for (const Block& block : pv.partition.blocks()) {
    std::vector<std::string> names;
    for (std::size_t i : block) names.push_back(game.players()[i]);
    out.blocks.push_back(std::move(names));
  }
  out.exhaustive = pv.equilibria.exhaustive;
  out.equilibria = pv.equilibria.equilibria.size();
  for (std::size_t i = 0; i < pv.players.size(); ++i) {
    const StructureValue& v = pv.players[i];
    SolveReport::PlayerValue p;
    p.player = game.players()[i];
    p.e_stay = v.e_stay;
    p.e_dev = v.e_dev;
    p.tau_stay = v.tau.stay;
    p.tau_dev = v.tau.deviate;
    p.incentive = v.tau.incentive;
    p.loss = v.tau.loss;
    p.value = v.value;
    p.tau_source =
        v.tau.source == TauSource::kComputed ? "computed" : "user-supplied";
    out.players.push_back(std::move(p));
  }
  return out;
}

json partition_json(const SolveReport::Partition& p) {
  json players = json::array();
  for (const auto& v : p.players) {
    players.push_back({{"player", v.player},
                       {"e_stay", v.e_stay},
                       {"e_dev", v.e_dev},
                       {"tau_stay", v.tau_stay},
                       {"tau_dev", v.tau_dev},
                       {"incentive", v.incentive},
                       {"loss", v.loss},
                       {"value", v.value},
                       {"tau_source", v.tau_source}});
  }
  return {{"label", p.label},
          {"blocks", p.blocks},
          {"equilibria_exhaustive", p.exhaustive},
          {"equilibria_count", p.equilibria},
          {"players", players}};
}

template <typename T>
T field(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    throw ParseError(std::string("report lacks \"") + key + "\"");
  }
  try {
    return node.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("report field \"") + key +
                     "\" has the wrong type");
  }
}

SolveReport::Partition partition_from(const json& node) {
  SolveReport::Partition p;
  p.label = field<std::string>(node, "label");
  p.blocks = field<std::vector<std::vector<std::string>>>(node, "blocks");
  p.exhaustive = field<bool>(node, "equilibria_exhaustive");
  p.equilibria = field<std::size_t>(node, "equilibria_count");
  for (const auto& v : field<json>(node, "players")) {
    SolveReport::PlayerValue pv;
    pv.player = field<std::string>(v, "player");
    pv.e_stay = field<double>(v, "e_stay");
    pv.e_dev = field<double>(v, "e_dev");
    pv.tau_stay = field<double>(v, "tau_stay");
    pv.tau_dev = field<double>(v, "tau_dev");
    pv.incentive = field<double>(v, "incentive");
    pv.loss = field<double>(v, "loss");
    pv.value = field<double>(v, "value");
    pv.tau_source = field<std::string>(v, "tau_source");
    p.players.push_back(std::move(pv));
  }
  return p;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

SolveReport make_solve_report(const Game& game, const AggravationProfile& aggs,
                              double tol, const CooperativeResult& result) {
  SolveReport out;
  out.players = game.players();
  for (const auto& agg : aggs) out.aggravation.push_back(agg.descriptor());
  out.tolerance = tol;
  for (const auto& pv : result.partitions) {
    out.partition_values.push_back(partition_entry(game, pv));
    if (pv.partition == result.p_star) {
      out.p_star = out.partition_values.back();
    }
  }
  out.induced_floor = result.floor;
  for (const auto& eq : result.equilibria) {
    SolveReport::Equilibrium e;
    if (eq.pure) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < eq.pure->size(); ++i) {
        labels.push_back(game.strategies(i)[(*eq.pure)[i]]);
      }
      e.profile = std::move(labels);
    }
    e.distribution = eq.profile;
    e.payoffs = eq.payoffs;
    e.mixed_certified = eq.mixed_certified;
    e.max_mixed_gain = eq.max_mixed_gain;
    out.cooperative_equilibria.push_back(std::move(e));
  }
  out.approximate = result.approximate;
  out.epsilon = result.epsilon;
  return out;
}

json to_json(const SolveReport& report) {
  json partitions = json::array();
  for (const auto& p : report.partition_values) {
    partitions.push_back(partition_json(p));
  }
  json equilibria = json::array();
  for (const auto& e : report.cooperative_equilibria) {
    equilibria.push_back(
        {{"profile", e.profile ? json(*e.profile) : json(nullptr)},
         {"distribution", e.distribution},
         {"payoffs", e.payoffs},
         {"mixed_certified", e.mixed_certified},
         {"max_mixed_gain", e.max_mixed_gain}});
  }
  return {{"players", report.players},
          {"aggravation", report.aggravation},
          {"tolerance", report.tolerance},
          {"partition_values", partitions},
          {"p_star", report.p_star ? partition_json(*report.p_star)
                                   : json(nullptr)},
          {"induced_floor", report.induced_floor},
          {"cooperative_equilibria", equilibria},
          {"approximate", report.approximate},
          {"epsilon", report.epsilon}};
}

SolveReport solve_report_from_json(const json& doc) {
  SolveReport out;
  out.players = field<std::vector<std::string>>(doc, "players");
  out.aggravation = field<std::vector<std::string>>(doc, "aggravation");
  out.tolerance = field<double>(doc, "tolerance");
  for (const auto& p : field<json>(doc, "partition_values")) {
    out.partition_values.push_back(partition_from(p));
  }
  const json p_star = field<json>(doc, "p_star");
  if (!p_star.is_null()) out.p_star = partition_from(p_star);
  out.induced_floor = field<std::vector<double>>(doc, "induced_floor");
  for (const auto& e : field<json>(doc, "cooperative_equilibria")) {
    SolveReport::Equilibrium eq;
    const json profile = field<json>(e, "profile");
    if (!profile.is_null()) {
      eq.profile = field<std::vector<std::string>>(e, "profile");
    }
    eq.distribution = field<std::vector<std::vector<double>>>(e, "distribution");
    eq.payoffs = field<std::vector<double>>(e, "payoffs");
    eq.mixed_certified = field<bool>(e, "mixed_certified");
    eq.max_mixed_gain = field<double>(e, "max_mixed_gain");
    out.cooperative_equilibria.push_back(std::move(eq));
  }
  out.approximate = field<bool>(doc, "approximate");
  out.epsilon = field<double>(doc, "epsilon");
  return out;
}

json to_json(const UgSolution& s,
             const std::optional<OfferPrediction>& prediction) {
  json out = {{"budget", s.budget},
              {"x_star", s.x_star},
              {"tau_stay", s.tau_stay},
              {"tau_dev", 1.0 - s.tau_stay},
              {"tau_source", s.tau_source == TauSource::kComputed
                                 ? "computed"
                                 : "user-supplied"},
              {"incentive", s.incentive},
              {"loss", s.loss},
              {"v_proposer", s.v_proposer},
              {"v_recipient", s.v_recipient},
              {"b_dictator", s.b_dictator},
              {"b_recipient", s.b_recipient},
              {"donation_cap", s.donation_cap},
              {"offer", s.offer}};
  if (prediction) {
    out["prediction"] = {{"offer", prediction->offer},
                         {"cap", prediction->cap},
                         {"cap_exceeded", prediction->cap_exceeded}};
  }
  return out;
}

json to_json(const NbpSolution& s) {
  return {{"budget", s.budget},
          {"x_star", s.x_star},
          {"claims", {s.claims[0], s.claims[1]}}};
}

json to_json(const std::vector<BeliefRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"alpha", r.belief.alpha},
                   {"beta", r.belief.beta},
                   {"donation", r.donation},
                   {"offer", r.offer}});
  }
  return out;
}

json to_json(const TreatmentReport& r) {
  json out = {{"n", r.n},
              {"mean_offer", optional_number(r.mean_offer)},
              {"mean_donation", optional_number(r.mean_donation)},
              {"exact_predictions", r.exact_predictions},
              {"inconsistent", r.inconsistent},
              {"mse_fitting", optional_number(r.mse_fitting)},
              {"mse_model", optional_number(r.mse_model)},
              {"degenerate", r.degenerate}};
  out["spearman"] = r.spearman ? json{{"rho", r.spearman->rho},
                                      {"p_value", r.spearman->p_value}}
                               : json(nullptr);
  out["fit"] = r.fit ? json{{"c0", r.fit->c0}, {"c1", r.fit->c1}}
                     : json(nullptr);
  return out;
}

json to_json(const std::string& treatment, const TreatmentAnalysis& analysis) {
  return {{"treatment", treatment},
          {"removed", analysis.removed},
          {"all", to_json(analysis.all)},
          {"filtered", to_json(analysis.filtered)}};
}

}  // namespace coopeq
