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

#ifndef COOPEQ_COOPERATIVE_HPP_
#define COOPEQ_COOPERATIVE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coopeq/coalition.hpp"
#include "coopeq/game.hpp"
#include "coopeq/nash.hpp"

namespace coopeq {

enum class TauSource { kComputed, kUserSupplied };

// Player i's subjective probabilities that the opponent keeps to (`stay`) or
// abandons (`deviate`) a coalition structure. The two always sum to 1.
struct DeviationParameters {
  double stay = 1.0;
  double deviate = 0.0;
  TauSource source = TauSource::kComputed;
  // Opponent's incentive and loss when computed, zero when user supplied.
  double incentive = 0.0;
  double loss = 0.0;
};

// τ = I / (I + L), with τ = 0 whenever I = 0 (also when L = 0).
DeviationParameters deviation_parameters(double incentive, double loss);

// Per-player value of a coalition structure:
// value = e_stay * tau_stay + e_dev * tau_dev.
struct StructureValue {
  double e_stay = 0.0;
  double e_dev = 0.0;
  DeviationParameters tau;
  double value = 0.0;
};

// Equilibria of the generated game, as base-game profiles. Player payoffs are
// read from the underlying full profile.
EquilibriumSet structure_equilibria(const GeneratedGame& generated,
                                    double tol = kDefaultTolerance);

// Aggravation of the best pure deviation of `deviator` against the
// opponent's equilibrium strategy, maximised over `equilibria`. Zero when no
// deviation gains more than `tol`.
double incentive(const Game& game, const EquilibriumSet& equilibria,
                 std::size_t deviator, const AggravationProfile& aggs,
                 double tol = kDefaultTolerance);

// Largest aggravation the deviator can suffer once the opponent reacts: for
// every equilibrium, every best deviation and every counter-move of the
// opponent that either profits against the equilibrium or does at least as
// well against the deviation, the drop from the deviator's equilibrium payoff.
// Zero when no counter-move lowers the deviator's payoff.
double loss(const Game& game, const EquilibriumSet& equilibria,
            std::size_t deviator, const AggravationProfile& aggs,
            double tol = kDefaultTolerance);

double incentive(const Game& game, const CoalitionStructure& partition,
                 std::size_t deviator, const AggravationProfile& aggs,
                 double tol = kDefaultTolerance);
double loss(const Game& game, const CoalitionStructure& partition,
            std::size_t deviator, const AggravationProfile& aggs,
            double tol = kDefaultTolerance);

// Deviation parameters of `player` for a two-player game.
DeviationParameters tau(const Game& game, const CoalitionStructure& partition,
                        std::size_t player, const AggravationProfile& aggs,
                        double tol = kDefaultTolerance);

// Values of a coalition structure for both players of a two-player game.
// `tau_deviate` optionally overrides each player's deviation probability.
// Throws SolverFailure if the generated game has no equilibrium or its
// minimum equilibrium payoffs cannot be certified.
std::vector<StructureValue> structure_value(
    const Game& game, const CoalitionStructure& partition,
    const AggravationProfile& aggs,
    const std::optional<std::vector<double>>& tau_deviate = std::nullopt,
    double tol = kDefaultTolerance);

// Scenario for the n-player value: `deviators` abandon the structure with
// probability `probability`, leaving the player a minimum of `min_payoff`.
struct DeviationScenario {
  Block deviators;
  double min_payoff = 0.0;
  double probability = 0.0;
};

// Probability-weighted sum of scenario payoffs. Throws InvalidParameters if
// a scenario names `player`, repeats a deviator set, or the probabilities do
// not sum to 1 within 1e-9.
double n_player_value(std::size_t num_players, std::size_t player,
                      const std::vector<DeviationScenario>& scenarios);

struct PartitionValues {
  CoalitionStructure partition;
  std::vector<StructureValue> players;
  EquilibriumSet equilibria;
};

// Values of every coalition structure of a two-player game.
std::vector<PartitionValues> analyze_partitions(
    const Game& game, const AggravationProfile& aggs,
    double tol = kDefaultTolerance,
    const std::optional<std::vector<double>>& tau_deviate = std::nullopt);

struct ParetoSolution {
  CoalitionStructure p_star;
  std::vector<double> values;
};

// Structure maximising both players' values at once; ties go to the grand
// coalition. Empty when no structure does.
std::optional<ParetoSolution> pareto_solvable(
    const std::vector<PartitionValues>& analysis,
    double tol = kDefaultTolerance);
std::optional<ParetoSolution> pareto_solvable(const Game& game,
                                              const AggravationProfile& aggs,
                                              double tol = kDefaultTolerance);

// The base game restricted to profiles paying every player at least its
// floor.
class InducedGame {
 public:
  InducedGame(Game base, std::vector<double> floor, double tol);

  const Game& base() const { return base_; }
  const std::vector<double>& floor() const { return floor_; }
  double tolerance() const { return tol_; }

  bool feasible(const PureProfile& profile) const;
  bool feasible(const MixedProfile& profile) const;
  std::vector<PureProfile> feasible_pure_profiles() const;
  // Base game cut down to strategies used by some feasible pure profile.
  Game restricted_game() const;

 private:
  Game base_;
  std::vector<double> floor_;
  double tol_;
};

// Throws NotInducible if neither a pure profile nor any of `witnesses` is
// feasible.
InducedGame induced_game(const Game& game, const std::vector<double>& floor,
                         const std::vector<MixedProfile>& witnesses = {},
                         double tol = kDefaultTolerance);

struct CooperativeEquilibrium {
  MixedProfile profile;
  std::optional<PureProfile> pure;
  std::vector<double> payoffs;
  // Largest gain any player gets from a feasible mixed deviation; the profile
  // is certified against mixed deviations when this is within tolerance.
  double max_mixed_gain = 0.0;
  bool mixed_certified = true;
};

struct CooperativeResult {
  std::vector<PartitionValues> partitions;
  CoalitionStructure p_star;
  std::vector<double> floor;
  std::vector<CooperativeEquilibrium> equilibria;
  // Set when no pure equilibrium exists and the list holds the best
  // epsilon-equilibrium of the feasibility grid instead.
  bool approximate = false;
  double epsilon = 0.0;
};

// Highest payoff `player` reaches over mixed strategies that keep the profile
// feasible, the opponents held at `profile`. Exact by vertex enumeration of
// the feasible slice of the player's simplex.
double best_feasible_payoff(const InducedGame& induced,
                            const MixedProfile& profile, std::size_t player);

// Pure equilibria of the induced game (no feasible strictly improving pure
// deviation), each with its mixed-deviation certificate.
std::vector<CooperativeEquilibrium> induced_pure_equilibria(
    const InducedGame& induced);

// Throws NotParetoSolvable or NotInducible.
CooperativeResult cooperative_equilibria(const Game& game,
                                         const AggravationProfile& aggs,
                                         double tol = kDefaultTolerance);

}  // namespace coopeq

#endif  // COOPEQ_COOPERATIVE_HPP_
