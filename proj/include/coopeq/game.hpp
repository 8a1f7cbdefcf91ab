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

#ifndef COOPEQ_GAME_HPP_
#define COOPEQ_GAME_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coopeq {

inline constexpr double kDefaultTolerance = 1e-9;

// One strategy index per player.
using PureProfile = std::vector<std::size_t>;
// Probability vector over one player's strategies.
using Distribution = std::vector<double>;
// One distribution per player.
using MixedProfile = std::vector<Distribution>;

// A finite normal-form game. The payoff table is flat, indexed with the first
// player outermost and the last player varying fastest, which is the order of
// the nested arrays in the JSON game format.
//
// The constructor does not reject malformed input so that `validate` can
// report every problem at once; accessors throw InvalidGame when they hit a
// hole in the table.
class Game {
 public:
  Game() = default;
  Game(std::vector<std::string> players,
       std::vector<std::vector<std::string>> strategies,
       std::vector<std::vector<double>> payoffs);

  // Evaluates `payoff_of` once per pure profile.
  static Game FromFunction(
      std::vector<std::string> players,
      std::vector<std::vector<std::string>> strategies,
      const std::function<std::vector<double>(const PureProfile&)>& payoff_of);

  std::size_t num_players() const { return players_.size(); }
  std::size_t num_strategies(std::size_t player) const;
  std::size_t num_profiles() const { return num_profiles_; }

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::string>& strategies(std::size_t player) const;
  const std::vector<std::vector<std::string>>& all_strategies() const {
    return strategies_;
  }
  const std::vector<std::vector<double>>& payoff_table() const {
    return payoffs_;
  }

  std::size_t index_of(const PureProfile& profile) const;
  PureProfile profile_at(std::size_t index) const;
  const std::vector<double>& payoff(const PureProfile& profile) const;
  const std::vector<double>& payoff_at(std::size_t index) const;

  std::optional<std::size_t> strategy_index(std::size_t player,
                                            const std::string& label) const;
  // "(C,D)" style rendering using strategy labels.
  std::string describe(const PureProfile& profile) const;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<std::vector<double>> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
};

std::vector<double> payoff(const Game& game, const PureProfile& profile);

// Multilinear expectation of every player's payoff.
std::vector<double> expected_payoff(const Game& game,
                                    const MixedProfile& profile);
double expected_payoff(const Game& game, const MixedProfile& profile,
                       std::size_t player);

// Throws InvalidDistribution unless each vector is nonnegative, sized to its
// player's strategy count and sums to 1 within `tol`.
void check_distribution(const Game& game, const MixedProfile& profile,
                        double tol = kDefaultTolerance);

MixedProfile point_mass(const Game& game, const PureProfile& profile);
MixedProfile uniform_profile(const Game& game);

// Every invariant violation, one message each. Empty iff the game is valid.
std::vector<std::string> validate(const Game& game);
void require_valid(const Game& game);

// All joint choices for `players` (in the given order), odometer order with
// the last listed player fastest.
std::vector<std::vector<std::size_t>> enumerate_assignments(
    const Game& game, std::span<const std::size_t> players);

// Same game with every payoff multiplied by `factor`.
Game scale_payoffs(const Game& game, double factor);

}  // namespace coopeq

#endif  // COOPEQ_GAME_HPP_
