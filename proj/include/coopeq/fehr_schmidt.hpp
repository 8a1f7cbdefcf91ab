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

#ifndef COOPEQ_FEHR_SCHMIDT_HPP_
#define COOPEQ_FEHR_SCHMIDT_HPP_

#include <optional>
#include <vector>

namespace coopeq {

// Inequity-averse preferences: alpha weighs disadvantageous inequality,
// beta advantageous inequality.
struct FsType {
  double alpha = 0.0;
  double beta = 0.0;
};

// Throws InvalidParameters unless 0 <= beta <= alpha and both are finite.
void check_fs_type(const FsType& type);

double fs_utility(double own, double other, const FsType& type);

// Smallest offer out of `budget` that `recipient` weakly prefers to accept:
// alpha * b / (1 + 2 alpha). With `grid_step` the offer is rounded up to the
// next multiple of the step.
double min_acceptable_offer(double budget, const FsType& recipient,
                            std::optional<double> grid_step = std::nullopt);

// A payoff-maximising proposer offers the least the recipient accepts.
double selfish_proposer_offer(double budget, const FsType& belief,
                              std::optional<double> grid_step = std::nullopt);

struct DonationChoice {
  double donation = 0.0;
  // Every donation up to equal payoffs is optimal; the lowest is reported.
  bool indifferent = false;
};

// Optimal donation of a dictator holding `b_dictator` to a recipient already
// owning `b_recipient`.
DonationChoice fs_dictator_donation(double b_dictator, double b_recipient,
                                    const FsType& dictator);

struct OfferChoice {
  double offer = 0.0;
  bool indifferent = false;
};

// Best accepted offer of an inequity-averse proposer facing a recipient of
// type `belief`.
OfferChoice fs_proposer_offer(double budget, const FsType& proposer,
                              const FsType& belief,
                              std::optional<double> grid_step = std::nullopt);

struct BeliefRow {
  FsType belief;
  double donation = 0.0;
  double offer = 0.0;
};

// Belief types (0,0), (0.5,0.25), (2,0.6) and (4,0.6).
std::vector<FsType> reference_belief_types();

// A selfish subject's dictator donation (budget 3b/4 against b/4) and
// ultimatum offer (budget b) for each reference belief type.
std::vector<BeliefRow> belief_rows(double budget);

}  // namespace coopeq

#endif  // COOPEQ_FEHR_SCHMIDT_HPP_
