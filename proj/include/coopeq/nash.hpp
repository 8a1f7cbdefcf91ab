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

#ifndef COOPEQ_NASH_HPP_
#define COOPEQ_NASH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "coopeq/game.hpp"

namespace coopeq {

struct EquilibriumSet {
  std::vector<MixedProfile> equilibria;
  // Tolerance used for the linear solves and for snapping probabilities.
  double tolerance = kDefaultTolerance;
  // True when every extreme equilibrium is listed. Linear payoff functionals
  // attain their extremes over the equilibrium set at these points.
  bool exhaustive = true;
  std::vector<std::string> notes;
};

// Expected payoff of each pure strategy of `player` against the other
// players' distributions in `profile` (the player's own entry is ignored).
std::vector<double> pure_strategy_payoffs(const Game& game, std::size_t player,
                                          const MixedProfile& profile);

double best_response_value(const Game& game, std::size_t player,
                           const MixedProfile& profile);

bool is_epsilon_equilibrium(const Game& game, const MixedProfile& profile,
                            double epsilon);

// Pure profiles where no player gains more than `tol` by a pure deviation.
std::vector<PureProfile> pure_equilibria(const Game& game, double tol = 0.0);

inline constexpr std::size_t kMaxBimatrixStrategies = 25;
inline constexpr std::size_t kDefaultSupportBudget = std::size_t{1} << 16;

// All extreme equilibria of a two-player game by support enumeration. For
// every pair (support of one player, set of opponent strategies made
// indifferent) the indifference system is solved; systems with a unique
// solution yield candidate vertices, singular ones are skipped and noted.
// Candidates of the two players are then paired and verified. Throws SizeLimit
// above 25 strategies per player or when the number of support pairs exceeds
// `support_budget`.
EquilibriumSet bimatrix_equilibria(
    const Game& game, double tol = kDefaultTolerance,
    std::size_t support_budget = kDefaultSupportBudget);

// Extreme equilibria of a one-player game: the payoff maximizers.
EquilibriumSet single_player_equilibria(const Game& game,
                                        double tol = kDefaultTolerance);

// Dispatches on player count (one or two). When the two-player support budget
// is exceeded the pure equilibria are returned with `exhaustive` false.
EquilibriumSet solve_equilibria(const Game& game,
                                double tol = kDefaultTolerance,
                                std::size_t support_budget = kDefaultSupportBudget);

// max over own pure strategies of the min over opponents' pure profiles.
// Every Nash equilibrium pays the player at least this much.
double pure_maxmin(const Game& game, std::size_t player);

}  // namespace coopeq

#endif  // COOPEQ_NASH_HPP_
