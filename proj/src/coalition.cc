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

#include "coopeq/coalition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coopeq/errors.hpp"

namespace coopeq {

AggravationProfile uniform_aggravation(const AggravationFunction& agg,
                                       std::size_t num_players) {
  return AggravationProfile(num_players, agg);
}

CoalitionStructure::CoalitionStructure(std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
  for (auto& block : blocks_) std::sort(block.begin(), block.end());
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) {
              if (a.empty() || b.empty()) return a.size() < b.size();
              return a.front() < b.front();
            });
}

CoalitionStructure CoalitionStructure::Selfish(std::size_t num_players) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < num_players; ++i) blocks.push_back({i});
  return CoalitionStructure(std::move(blocks));
}

CoalitionStructure CoalitionStructure::Grand(std::size_t num_players) {
  Block all(num_players);
  for (std::size_t i = 0; i < num_players; ++i) all[i] = i;
  return CoalitionStructure({all});
}

bool CoalitionStructure::is_selfish() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return b.size() == 1; });
}

void CoalitionStructure::check_partition_of(std::size_t num_players) const {
  std::vector<int> seen(num_players, 0);
  for (const auto& block : blocks_) {
    if (block.empty()) throw InvalidParameters("coalition structure has an empty block");
    for (std::size_t p : block) {
      if (p >= num_players) {
        throw InvalidParameters("coalition structure names player " +
                                std::to_string(p + 1) + " of " +
                                std::to_string(num_players));
      }
      if (seen[p]++) {
        throw InvalidParameters("player " + std::to_string(p + 1) +
                                " appears in two blocks");
      }
    }
  }
  for (std::size_t p = 0; p < num_players; ++p) {
    if (!seen[p]) {
      throw InvalidParameters("player " + std::to_string(p + 1) +
                              " is not covered by the coalition structure");
    }
  }
}

std::string CoalitionStructure::describe() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += ',';
    out += '{';
    for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(blocks_[b][k] + 1);
    }
    out += '}';
  }
  return out;
}

std::vector<CoalitionStructure> enumerate_partitions(std::size_t num_players) {
  if (num_players == 0) {
    throw InvalidParameters("cannot partition an empty player set");
  }
  if (num_players > kMaxPartitionPlayers) {
    throw SizeLimit("partition enumeration is capped at " +
                    std::to_string(kMaxPartitionPlayers) + " players");
  }
  // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
  std::vector<CoalitionStructure> out;
  std::vector<std::size_t> label(num_players, 0);
  std::vector<std::size_t> prefix_max(num_players, 0);
  while (true) {
    std::vector<Block> blocks(prefix_max.back() + 1);
    for (std::size_t i = 0; i < num_players; ++i) blocks[label[i]].push_back(i);
    out.emplace_back(std::move(blocks));

    std::size_t i = num_players;
    while (--i > 0) {
      if (label[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t j = i + 1; j < num_players; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

Block complement(const Game& game, const Block& block) {
  Block out;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    if (!std::binary_search(block.begin(), block.end(), p)) out.push_back(p);
  }
  return out;
}

PureProfile combine(const Game& game, const CoalitionProfile& inside,
                    const Block& outside,
                    const std::vector<std::size_t>& outside_choices) {
  PureProfile profile(game.num_players(), 0);
  for (std::size_t k = 0; k < inside.coalition.size(); ++k) {
    profile.at(inside.coalition[k]) = inside.choices.at(k);
  }
  for (std::size_t k = 0; k < outside.size(); ++k) {
    profile.at(outside[k]) = outside_choices.at(k);
  }
  return profile;
}

double coalition_welfare(const Game& game, const PureProfile& profile,
                         const Block& block) {
  const auto& u = game.payoff(profile);
  double total = 0.0;
  for (std::size_t p : block) total += u.at(p);
  return total;
}

double unfairness(const Game& game, const PureProfile& profile,
                  const Block& block, const AggravationProfile& aggs) {
  if (block.size() <= 1) return 0.0;
  if (aggs.size() != game.num_players()) {
    throw InvalidParameters("need one aggravation function per player");
  }
  const auto& u = game.payoff(profile);
  double welfare = 0.0;
  for (std::size_t p : block) welfare += u.at(p);
  double highest = -std::numeric_limits<double>::infinity();
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t p : block) {
    if (welfare < u[p] - kStrictnessMargin) {
      throw DomainError("coalition welfare " + std::to_string(welfare) +
                            " is below the payoff of player " +
                            std::to_string(p + 1) + " at " +
                            game.describe(profile),
                        static_cast<std::ptrdiff_t>(p));
    }
    const double a = aggs[p](welfare, u[p]);
    highest = std::max(highest, a);
    lowest = std::min(lowest, a);
  }
  return highest - lowest;
}

namespace {

std::vector<CoalitionProfile> block_profiles(const Game& game,
                                             const Block& block) {
  std::vector<CoalitionProfile> out;
  for (auto& choices : enumerate_assignments(game, block)) {
    out.push_back({block, std::move(choices)});
  }
  return out;
}

void check_block(const Game& game, const Block& block) {
  if (block.empty()) throw InvalidParameters("empty coalition");
  if (!std::is_sorted(block.begin(), block.end()) ||
      std::adjacent_find(block.begin(), block.end()) != block.end() ||
      block.back() >= game.num_players()) {
    throw InvalidParameters("coalition must list distinct valid players in order");
  }
}

std::vector<CoalitionProfile> select_minimal(
    std::vector<CoalitionProfile> candidates, const std::vector<double>& scores,
    double tol) {
  const double best = *std::min_element(scores.begin(), scores.end());
  std::vector<CoalitionProfile> out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (scores[k] <= best + tol) out.push_back(std::move(candidates[k]));
  }
  return out;
}

}  // namespace

std::vector<CoalitionProfile> fair_set(const Game& game, const Block& block,
                                       const AggravationProfile& aggs,
                                       double tol) {
  check_block(game, block);
  const Block outside = complement(game, block);
  const auto outside_choices = enumerate_assignments(game, outside);
  auto candidates = block_profiles(game, block);
  std::vector<double> worst(candidates.size(), 0.0);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    for (const auto& rest : outside_choices) {
      worst[k] = std::max(
          worst[k],
          unfairness(game, combine(game, candidates[k], outside, rest), block,
                     aggs));
    }
  }
  return select_minimal(std::move(candidates), worst, tol);
}

std::vector<CoalitionProfile> fair_set_given(const Game& game,
                                             const Block& block,
                                             const AggravationProfile& aggs,
                                             const PureProfile& context,
                                             double tol) {
  check_block(game, block);
  game.index_of(context);
  auto candidates = block_profiles(game, block);
  std::vector<double> scores(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    PureProfile s = context;
    for (std::size_t m = 0; m < block.size(); ++m) {
      s[block[m]] = candidates[k].choices[m];
    }
    scores[k] = unfairness(game, s, block, aggs);
  }
  return select_minimal(std::move(candidates), scores, tol);
}

bool super_dominates(const Game& game, const CoalitionProfile& challenger,
                     const CoalitionProfile& incumbent) {
  if (challenger.coalition != incumbent.coalition) {
    throw InvalidParameters("super-dominance compares profiles of one coalition");
  }
  const Block& block = challenger.coalition;
  const Block outside = complement(game, block);
  const auto outside_choices = enumerate_assignments(game, outside);
  for (std::size_t p : block) {
    double challenger_worst = std::numeric_limits<double>::infinity();
    double incumbent_best = -std::numeric_limits<double>::infinity();
    for (const auto& rest : outside_choices) {
      challenger_worst = std::min(
          challenger_worst,
          game.payoff(combine(game, challenger, outside, rest)).at(p));
      incumbent_best = std::max(
          incumbent_best,
          game.payoff(combine(game, incumbent, outside, rest)).at(p));
    }
    if (!(challenger_worst > incumbent_best)) return false;
  }
  return true;
}

std::vector<CoalitionProfile> max_fair(const Game& game, const Block& block,
                                       const AggravationProfile& aggs,
                                       double tol) {
  const auto fair = fair_set(game, block, aggs, tol);
  std::vector<CoalitionProfile> out;
  for (const auto& candidate : fair) {
    const bool dominated =
        std::any_of(fair.begin(), fair.end(), [&](const CoalitionProfile& o) {
          return super_dominates(game, o, candidate);
        });
    if (!dominated) out.push_back(candidate);
  }
  return out;
}

PureProfile GeneratedGame::to_base(const PureProfile& meta) const {
  game.index_of(meta);
  PureProfile profile(base.num_players(), 0);
  for (std::size_t b = 0; b < meta.size(); ++b) {
    const auto& chosen = allowed[b][meta[b]];
    for (std::size_t k = 0; k < chosen.coalition.size(); ++k) {
      profile[chosen.coalition[k]] = chosen.choices[k];
    }
  }
  return profile;
}

MixedProfile GeneratedGame::to_base(const MixedProfile& meta) const {
  check_distribution(game, meta);
  MixedProfile profile(base.num_players());
  for (std::size_t p = 0; p < base.num_players(); ++p) {
    profile[p].assign(base.num_strategies(p), 0.0);
  }
  for (std::size_t b = 0; b < meta.size(); ++b) {
    const Block& block = partition.blocks()[b];
    if (block.size() > 1) {
      std::size_t support = 0;
      std::size_t chosen = 0;
      for (std::size_t k = 0; k < meta[b].size(); ++k) {
        if (meta[b][k] > kDefaultTolerance) {
          ++support;
          chosen = k;
        }
      }
      if (support != 1) {
        throw InvalidDistribution(
            "a mixed strategy of a multi-player coalition is correlated");
      }
      const auto& cp = allowed[b][chosen];
      for (std::size_t k = 0; k < cp.coalition.size(); ++k) {
        profile[cp.coalition[k]][cp.choices[k]] = 1.0;
      }
      continue;
    }
    for (std::size_t k = 0; k < meta[b].size(); ++k) {
      profile[block.front()][allowed[b][k].choices.front()] += meta[b][k];
    }
  }
  return profile;
}

GeneratedGame generate_game(const Game& game,
                            const CoalitionStructure& partition,
                            const AggravationProfile& aggs, double tol) {
  require_valid(game);
  partition.check_partition_of(game.num_players());
  GeneratedGame out{game, partition, {}, {}};
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  for (const Block& block : partition.blocks()) {
    out.allowed.push_back(max_fair(game, block, aggs, tol));
    if (block.size() == 1) {
      names.push_back(game.players()[block.front()]);
    } else {
      std::string name = "{";
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k) name += ',';
        name += game.players()[block[k]];
      }
      names.push_back(name + "}");
    }
    std::vector<std::string> block_labels;
    for (const auto& cp : out.allowed.back()) {
      if (block.size() == 1) {
        block_labels.push_back(game.strategies(block.front())[cp.choices.front()]);
        continue;
      }
      std::string label = "(";
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k) label += ',';
        label += game.strategies(block[k])[cp.choices[k]];
      }
      block_labels.push_back(label + ")");
    }
    labels.push_back(std::move(block_labels));
  }
  const auto& blocks = partition.blocks();
  const auto& allowed = out.allowed;
  out.game = Game::FromFunction(names, labels, [&](const PureProfile& meta) {
    PureProfile s(game.num_players(), 0);
    for (std::size_t b = 0; b < meta.size(); ++b) {
      const auto& cp = allowed[b][meta[b]];
      for (std::size_t k = 0; k < cp.coalition.size(); ++k) {
        s[cp.coalition[k]] = cp.choices[k];
      }
    }
    std::vector<double> welfare(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      welfare[b] = coalition_welfare(game, s, blocks[b]);
    }
    return welfare;
  });
  return out;
}

}  // namespace coopeq
