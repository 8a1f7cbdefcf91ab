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

#ifndef COOPEQ_PARAMETRIC_HPP_
#define COOPEQ_PARAMETRIC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopeq/aggravation.hpp"
#include "coopeq/cooperative.hpp"
#include "coopeq/game.hpp"

namespace coopeq {

inline constexpr int kBisectionIterations = 200;

// Root of Agg_P(1, 1 - x) = Agg_R(1, x) on (0, 1) by bisection. Throws
// SolverFailure if the difference does not change sign over [0, 1] or the
// bracket does not shrink to `tol` within 200 iterations.
double solve_xstar(const AggravationFunction& agg_proposer,
                   const AggravationFunction& agg_recipient,
                   double tol = kDefaultTolerance);

struct UgSolution {
  double budget = 0.0;
  double x_star = 0.0;
  // Recipient's probability that the proposer keeps to the grand coalition.
  double tau_stay = 0.0;
  TauSource tau_source = TauSource::kComputed;
  // Proposer's incentive and loss on the unit budget (zero when overridden).
  double incentive = 0.0;
  double loss = 0.0;
  double v_proposer = 0.0;
  double v_recipient = 0.0;
  // The induced dictator game: the proposer keeps b_dictator, the recipient
  // already owns b_recipient.
  double b_dictator = 0.0;
  double b_recipient = 0.0;
  double donation_cap = 0.0;
  double offer = 0.0;
};

// Closed-form Ultimatum Game solution. Aggravations act on payoffs scaled to
// a unit budget. `tau_stay` overrides the computed probability.
UgSolution ug_solution(double budget, const AggravationFunction& agg_proposer,
                       const AggravationFunction& agg_recipient,
                       std::optional<double> tau_stay = std::nullopt,
                       double tol = kDefaultTolerance);

struct OfferPrediction {
  double offer = 0.0;
  double cap = 0.0;
  // Donation above b * x* * (1 - tau_stay); the offer is still reported.
  bool cap_exceeded = false;
};

// offer = b * x* * tau_stay + donation.
OfferPrediction ug_predict_offer(double budget, double x_star, double tau_stay,
                                 double donation);

struct NbpSolution {
  double budget = 0.0;
  double x_star = 0.0;
  double claims[2] = {0.0, 0.0};
};

NbpSolution nbp_solution(double budget, const AggravationFunction& agg_first,
                         const AggravationFunction& agg_second,
                         double tol = kDefaultTolerance);

struct PurifiabilityViolation {
  std::size_t sample = 0;
  std::size_t player = 0;
};

struct PurifiabilityReport {
  std::size_t samples = 0;
  std::vector<PurifiabilityViolation> violations;
  bool purifiable() const { return violations.empty(); }
};

// For random mixed profiles, looks for a pure strategy of each player that
// does at least as well as the mixed one against every pure opponent profile.
PurifiabilityReport check_purifiable(const Game& game, std::size_t samples,
                                     std::uint64_t seed = 42,
                                     double tol = kDefaultTolerance);

// x* when the proposer's aggravation is c (x - y) and the recipient's is
// linear. Equals 1 / (1 + c).
double wealth_asymmetry_xstar(double c_proposer,
                              double tol = kDefaultTolerance);

// Proposer offers b*k/steps for k = 0..steps; the recipient accepts or
// rejects. Labels print offers with 6 significant digits.
Game make_ultimatum_game(double budget, std::size_t steps);

// Both players claim b*k/steps; compatible claims are paid, else both get 0.
Game make_bargaining_game(double budget, std::size_t steps);

// Shortest decimal rendering with at most 6 significant digits.
std::string format_number(double value);

}  // namespace coopeq

#endif  // COOPEQ_PARAMETRIC_HPP_
