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

#include "coopeq/fehr_schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coopeq/errors.hpp"

namespace coopeq {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameters(std::string(what) + " must be positive");
  }
}

double round_up(double value, std::optional<double> step) {
  if (!step) return value;
  require_positive(*step, "grid step");
  return std::ceil(value / *step - 1e-9) * *step;
}

}  // namespace

void check_fs_type(const FsType& type) {
  if (!std::isfinite(type.alpha) || !std::isfinite(type.beta) ||
      type.beta < 0.0 || type.beta > type.alpha) {
    throw InvalidParameters("inequity type needs 0 <= beta <= alpha");
  }
}

double fs_utility(double own, double other, const FsType& type) {
  return own - type.alpha * std::max(other - own, 0.0) -
         type.beta * std::max(own - other, 0.0);
}

double min_acceptable_offer(double budget, const FsType& recipient,
                            std::optional<double> grid_step) {
  require_positive(budget, "budget");
  check_fs_type(recipient);
  const double x = recipient.alpha * budget / (1.0 + 2.0 * recipient.alpha);
  return round_up(x, grid_step);
}

double selfish_proposer_offer(double budget, const FsType& belief,
                              std::optional<double> grid_step) {
  return min_acceptable_offer(budget, belief, grid_step);
}

DonationChoice fs_dictator_donation(double b_dictator, double b_recipient,
                                    const FsType& dictator) {
  check_fs_type(dictator);
  if (!(b_dictator >= 0.0) || !(b_recipient >= 0.0)) {
    throw InvalidParameters("budgets must be nonnegative");
  }
  DonationChoice out;
  if (b_dictator <= b_recipient) return out;
  // Utility falls at rate 1 - 2 beta per unit donated until payoffs meet.
  if (dictator.beta > 0.5) {
    out.donation = (b_dictator - b_recipient) / 2.0;
  } else if (dictator.beta == 0.5) {
    out.indifferent = true;
  }
  return out;
}

OfferChoice fs_proposer_offer(double budget, const FsType& proposer,
                              const FsType& belief,
                              std::optional<double> grid_step) {
  check_fs_type(proposer);
  const double lowest = min_acceptable_offer(budget, belief, grid_step);
  // Proposer utility is piecewise linear in the offer with a kink at b/2,
  // so the optimum sits at the lowest accepted offer or at the kink.
  const double split = std::max(lowest, budget / 2.0);
  const double u_low = fs_utility(budget - lowest, lowest, proposer);
  const double u_split = fs_utility(budget - split, split, proposer);
  OfferChoice out;
  out.offer = u_split > u_low ? split : lowest;
  out.indifferent = split != lowest && u_split == u_low;
  return out;
}

std::vector<FsType> reference_belief_types() {
  return {{0.0, 0.0}, {0.5, 0.25}, {2.0, 0.6}, {4.0, 0.6}};
}

std::vector<BeliefRow> belief_rows(double budget) {
  require_positive(budget, "budget");
  const FsType selfish{0.0, 0.0};
  std::vector<BeliefRow> out;
  for (const FsType& belief : reference_belief_types()) {
    BeliefRow row;
    row.belief = belief;
    row.donation =
        fs_dictator_donation(0.75 * budget, 0.25 * budget, selfish).donation;
    row.offer = selfish_proposer_offer(budget, belief);
    out.push_back(row);
  }
  return out;
}

}  // namespace coopeq
