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

#include "coopeq/game.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "coopeq/errors.hpp"

namespace coopeq {

Game::Game(std::vector<std::string> players,
           std::vector<std::vector<std::string>> strategies,
           std::vector<std::vector<double>> payoffs)
    : players_(std::move(players)),
      strategies_(std::move(strategies)),
      payoffs_(std::move(payoffs)) {
  strides_.assign(strategies_.size(), 1);
  num_profiles_ = strategies_.empty() ? 0 : 1;
  for (std::size_t i = strategies_.size(); i-- > 0;) {
    strides_[i] = num_profiles_;
    num_profiles_ *= strategies_[i].size();
  }
}

Game Game::FromFunction(
    std::vector<std::string> players,
    std::vector<std::vector<std::string>> strategies,
    const std::function<std::vector<double>(const PureProfile&)>& payoff_of) {
  Game shape(std::move(players), std::move(strategies), {});
  std::vector<std::vector<double>> table(shape.num_profiles());
  for (std::size_t k = 0; k < table.size(); ++k) {
    table[k] = payoff_of(shape.profile_at(k));
  }
  return Game(shape.players_, shape.strategies_, std::move(table));
}

std::size_t Game::num_strategies(std::size_t player) const {
  return strategies(player).size();
}

const std::vector<std::string>& Game::strategies(std::size_t player) const {
  if (player >= strategies_.size()) {
    throw InvalidProfile("player index " + std::to_string(player) +
                         " out of range");
  }
  return strategies_[player];
}

std::size_t Game::index_of(const PureProfile& profile) const {
  if (profile.size() != strategies_.size()) {
    throw InvalidProfile("profile has " + std::to_string(profile.size()) +
                         " entries, game has " +
                         std::to_string(strategies_.size()) + " players");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= strategies_[i].size()) {
      throw InvalidProfile("strategy index " + std::to_string(profile[i]) +
                           " out of range for player " + std::to_string(i));
    }
    index += profile[i] * strides_[i];
  }
  return index;
}

PureProfile Game::profile_at(std::size_t index) const {
  PureProfile profile(strategies_.size());
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    profile[i] = index / strides_[i];
    index %= strides_[i];
  }
  return profile;
}

const std::vector<double>& Game::payoff(const PureProfile& profile) const {
  return payoff_at(index_of(profile));
}

const std::vector<double>& Game::payoff_at(std::size_t index) const {
  if (index >= payoffs_.size() || payoffs_[index].size() != players_.size()) {
    throw InvalidGame("no payoff vector stored for profile " +
                      describe(profile_at(index)));
  }
  return payoffs_[index];
}

std::optional<std::size_t> Game::strategy_index(std::size_t player,
                                                const std::string& label) const {
  const auto& labels = strategies(player);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == label) return k;
  }
  return std::nullopt;
}

std::string Game::describe(const PureProfile& profile) const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out << ',';
    if (i < strategies_.size() && profile[i] < strategies_[i].size()) {
      out << strategies_[i][profile[i]];
    } else {
      out << '#' << profile[i];
    }
  }
  out << ')';
  return out.str();
}

std::vector<double> payoff(const Game& game, const PureProfile& profile) {
  return game.payoff(profile);
}

void check_distribution(const Game& game, const MixedProfile& profile,
                        double tol) {
  if (profile.size() != game.num_players()) {
    throw InvalidDistribution("mixed profile has " +
                              std::to_string(profile.size()) +
                              " distributions for " +
                              std::to_string(game.num_players()) + " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].size() != game.num_strategies(i)) {
      throw InvalidDistribution("distribution of player " + std::to_string(i) +
                                " has wrong length");
    }
    double total = 0.0;
    for (double p : profile[i]) {
      if (!(p >= -tol)) {
        throw InvalidDistribution("negative probability for player " +
                                  std::to_string(i));
      }
      total += p;
    }
    if (std::abs(total - 1.0) > tol) {
      throw InvalidDistribution("distribution of player " + std::to_string(i) +
                                " sums to " + std::to_string(total));
    }
  }
}

std::vector<double> expected_payoff(const Game& game,
                                    const MixedProfile& profile) {
  check_distribution(game, profile);
  const std::size_t n = game.num_players();
  std::vector<double> total(n, 0.0);
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    double weight = 1.0;
    for (std::size_t i = 0; i < n && weight != 0.0; ++i) {
      weight *= profile[i][s[i]];
    }
    if (weight == 0.0) continue;
    const auto& u = game.payoff_at(k);
    for (std::size_t i = 0; i < n; ++i) total[i] += weight * u[i];
  }
  return total;
}

double expected_payoff(const Game& game, const MixedProfile& profile,
                       std::size_t player) {
  return expected_payoff(game, profile).at(player);
}

MixedProfile point_mass(const Game& game, const PureProfile& profile) {
  game.index_of(profile);
  MixedProfile mixed(game.num_players());
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    mixed[i].assign(game.num_strategies(i), 0.0);
    mixed[i][profile[i]] = 1.0;
  }
  return mixed;
}

MixedProfile uniform_profile(const Game& game) {
  MixedProfile mixed(game.num_players());
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    const auto m = game.num_strategies(i);
    mixed[i].assign(m, 1.0 / static_cast<double>(m));
  }
  return mixed;
}

std::vector<std::string> validate(const Game& game) {
  std::vector<std::string> issues;
  const std::size_t n = game.num_players();
  if (n == 0) issues.push_back("game has no players");
  std::set<std::string> ids;
  for (const auto& id : game.players()) {
    if (!ids.insert(id).second) issues.push_back("duplicate player id '" + id + "'");
  }
  const auto& strategies = game.all_strategies();
  if (strategies.size() != n) {
    issues.push_back("strategies listed for " +
                     std::to_string(strategies.size()) + " players, expected " +
                     std::to_string(n));
    return issues;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (strategies[i].empty()) {
      issues.push_back("player " + game.players()[i] + " has no strategies");
    }
    std::set<std::string> seen;
    for (const auto& label : strategies[i]) {
      if (!seen.insert(label).second) {
        issues.push_back("duplicate strategy label '" + label +
                         "' for player " + game.players()[i]);
      }
    }
  }
  const auto& table = game.payoff_table();
  if (table.size() > game.num_profiles()) {
    issues.push_back("payoff table has " + std::to_string(table.size()) +
                     " entries for " + std::to_string(game.num_profiles()) +
                     " profiles");
  }
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    if (k >= table.size() || table[k].empty()) {
      issues.push_back("missing payoff for profile " + game.describe(s));
      continue;
    }
    if (table[k].size() != n) {
      issues.push_back("payoff for profile " + game.describe(s) + " has " +
                       std::to_string(table[k].size()) + " entries");
      continue;
    }
    for (double v : table[k]) {
      if (!std::isfinite(v)) {
        issues.push_back("non-finite payoff at profile " + game.describe(s));
        break;
      }
    }
  }
  return issues;
}

void require_valid(const Game& game) {
  const auto issues = validate(game);
  if (issues.empty()) return;
  std::string message = "invalid game:";
  for (const auto& issue : issues) message += "\n  " + issue;
  throw InvalidGame(message);
}

std::vector<std::vector<std::size_t>> enumerate_assignments(
    const Game& game, std::span<const std::size_t> players) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(players.size(), 0);
  for (std::size_t p : players) {
    if (game.num_strategies(p) == 0) return out;
  }
  while (true) {
    out.push_back(current);
    std::size_t pos = players.size();
    while (pos > 0) {
      --pos;
      if (++current[pos] < game.num_strategies(players[pos])) break;
      current[pos] = 0;
      if (pos == 0) return out;
    }
    if (players.empty()) return out;
  }
}

Game scale_payoffs(const Game& game, double factor) {
  auto table = game.payoff_table();
  for (auto& entry : table) {
    for (auto& v : entry) v *= factor;
  }
  return Game(game.players(), game.all_strategies(), std::move(table));
}

}  // namespace coopeq
