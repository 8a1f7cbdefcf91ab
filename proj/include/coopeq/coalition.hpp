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

#ifndef COOPEQ_COALITION_HPP_
#define COOPEQ_COALITION_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "coopeq/aggravation.hpp"
#include "coopeq/game.hpp"

namespace coopeq {

// Sorted player indices forming one coalition.
using Block = std::vector<std::size_t>;

// One aggravation function per player, indexed like Game::players().
using AggravationProfile = std::vector<AggravationFunction>;

AggravationProfile uniform_aggravation(const AggravationFunction& agg,
                                       std::size_t num_players);

// A partition of the player set. Blocks are kept sorted internally and
// ordered by their least member, so equality is structural.
class CoalitionStructure {
 public:
  CoalitionStructure() = default;
  explicit CoalitionStructure(std::vector<Block> blocks);

  static CoalitionStructure Selfish(std::size_t num_players);
  static CoalitionStructure Grand(std::size_t num_players);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  bool is_selfish() const;
  bool is_grand() const { return blocks_.size() == 1; }

  // Throws InvalidParameters unless the blocks partition {0, ..., n-1}.
  void check_partition_of(std::size_t num_players) const;

  // 1-based rendering, e.g. "{1},{2}" or "{1,2}".
  std::string describe() const;

  bool operator==(const CoalitionStructure&) const = default;

 private:
  std::vector<Block> blocks_;
};

// Joint choice of a coalition: choices[k] is the strategy of coalition[k].
struct CoalitionProfile {
  Block coalition;
  std::vector<std::size_t> choices;

  auto operator<=>(const CoalitionProfile&) const = default;
};

inline constexpr std::size_t kMaxPartitionPlayers = 10;

// All set partitions of n players (Bell(n) of them). Throws SizeLimit for
// n > 10 and InvalidParameters for n == 0.
std::vector<CoalitionStructure> enumerate_partitions(std::size_t num_players);

// Players not in `block`, ascending.
Block complement(const Game& game, const Block& block);

// Full profile from a coalition profile and a joint choice of the complement.
PureProfile combine(const Game& game, const CoalitionProfile& inside,
                    const Block& outside,
                    const std::vector<std::size_t>& outside_choices);

double coalition_welfare(const Game& game, const PureProfile& profile,
                         const Block& block);

// Spread between the largest and smallest member aggravation relative to the
// coalition's welfare. Throws DomainError (carrying the member) when a
// member's payoff exceeds the welfare.
double unfairness(const Game& game, const PureProfile& profile,
                  const Block& block, const AggravationProfile& aggs);

// Coalition profiles whose worst-case unfairness over every complement
// choice is within `tol` of the minimum. For the grand coalition this is
// the plain set of unfairness minimizers.
std::vector<CoalitionProfile> fair_set(const Game& game, const Block& block,
                                       const AggravationProfile& aggs,
                                       double tol = kDefaultTolerance);

// Fair set with the complement held at the choices in `context` (entries of
// block members in `context` are ignored).
std::vector<CoalitionProfile> fair_set_given(const Game& game,
                                             const Block& block,
                                             const AggravationProfile& aggs,
                                             const PureProfile& context,
                                             double tol = kDefaultTolerance);

// True iff every member's worst payoff under `challenger` strictly exceeds
// that member's best payoff under `incumbent`, over all complement choices.
bool super_dominates(const Game& game, const CoalitionProfile& challenger,
                     const CoalitionProfile& incumbent);

// Elements of the fair set that no other fair profile super-dominates.
std::vector<CoalitionProfile> max_fair(const Game& game, const Block& block,
                                       const AggravationProfile& aggs,
                                       double tol = kDefaultTolerance);

// The game played between coalitions. Meta-player k is block k of the
// partition; its strategies are that block's undominated fair profiles and
// its payoff is the block's total welfare.
struct GeneratedGame {
  Game base;
  CoalitionStructure partition;
  std::vector<std::vector<CoalitionProfile>> allowed;
  Game game;

  // Base-game profile realised by a pure meta profile.
  PureProfile to_base(const PureProfile& meta) const;
  // Base-game mixed profile realised by a meta mixed profile. Coalitions of
  // two or more players must play a pure meta strategy; their correlated
  // mixtures are not product distributions. Throws InvalidDistribution.
  MixedProfile to_base(const MixedProfile& meta) const;
};

GeneratedGame generate_game(const Game& game,
                            const CoalitionStructure& partition,
                            const AggravationProfile& aggs,
                            double tol = kDefaultTolerance);

}  // namespace coopeq

#endif  // COOPEQ_COALITION_HPP_
