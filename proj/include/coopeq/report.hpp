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

#ifndef COOPEQ_REPORT_HPP_
#define COOPEQ_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coopeq/cooperative.hpp"
#include "coopeq/fehr_schmidt.hpp"
#include "coopeq/parametric.hpp"
#include "coopeq/stats.hpp"

namespace coopeq {

// Plain-data mirror of a solve run, serialised as documented in
// docs/report_schema.md.
struct SolveReport {
  struct PlayerValue {
    std::string player;
    double e_stay = 0.0;
    double e_dev = 0.0;
    double tau_stay = 1.0;
    double tau_dev = 0.0;
    double incentive = 0.0;
    double loss = 0.0;
    double value = 0.0;
    std::string tau_source;

    bool operator==(const PlayerValue&) const = default;
  };
  struct Partition {
    std::string label;
    std::vector<std::vector<std::string>> blocks;
    bool exhaustive = true;
    std::size_t equilibria = 0;
    std::vector<PlayerValue> players;

    bool operator==(const Partition&) const = default;
  };
  struct Equilibrium {
    // Strategy labels when every player plays a pure strategy.
    std::optional<std::vector<std::string>> profile;
    std::vector<std::vector<double>> distribution;
    std::vector<double> payoffs;
    bool mixed_certified = true;
    double max_mixed_gain = 0.0;

    bool operator==(const Equilibrium&) const = default;
  };

  std::vector<std::string> players;
  std::vector<std::string> aggravation;
  double tolerance = kDefaultTolerance;
  std::vector<Partition> partition_values;
  std::optional<Partition> p_star;
  std::vector<double> induced_floor;
  std::vector<Equilibrium> cooperative_equilibria;
  bool approximate = false;
  double epsilon = 0.0;

  bool operator==(const SolveReport&) const = default;
};

SolveReport make_solve_report(const Game& game, const AggravationProfile& aggs,
                              double tol, const CooperativeResult& result);

nlohmann::json to_json(const SolveReport& report);
// Throws ParseError when a field is missing or has the wrong type.
SolveReport solve_report_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const UgSolution& solution,
                       const std::optional<OfferPrediction>& prediction);
nlohmann::json to_json(const NbpSolution& solution);
nlohmann::json to_json(const std::vector<BeliefRow>& rows);
nlohmann::json to_json(const TreatmentReport& report);
nlohmann::json to_json(const std::string& treatment,
                       const TreatmentAnalysis& analysis);

}  // namespace coopeq

#endif  // COOPEQ_REPORT_HPP_
