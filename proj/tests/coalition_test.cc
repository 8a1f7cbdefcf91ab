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
#include <random>

#include <gtest/gtest.h>

#include "coopeq/errors.hpp"
#include "support/fairness_oracle.hpp"
#include "support/random_games.hpp"

namespace coopeq {
namespace {

Game PdVariant() {
  return Game({"P1", "P2"}, {{"C", "D"}, {"C", "D"}},
              {{10, 10}, {1, 20}, {20, 1}, {2, 2}});
}

std::vector<std::vector<std::size_t>> ChoicesOf(
    const std::vector<CoalitionProfile>& profiles) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : profiles) out.push_back(p.choices);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(CoalitionTest, PartitionCounts) {
  EXPECT_EQ(enumerate_partitions(1).size(), 1u);
  EXPECT_EQ(enumerate_partitions(2).size(), 2u);
  EXPECT_EQ(enumerate_partitions(3).size(), 5u);
  EXPECT_EQ(enumerate_partitions(4).size(), 15u);
  EXPECT_EQ(enumerate_partitions(6).size(), 203u);
  EXPECT_THROW(enumerate_partitions(11), SizeLimit);
  EXPECT_THROW(enumerate_partitions(0), InvalidParameters);
}

TEST(CoalitionTest, PartitionsAreDistinct) {
  const auto parts = enumerate_partitions(4);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    parts[a].check_partition_of(4);
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      EXPECT_FALSE(parts[a] == parts[b]);
    }
  }
}

TEST(CoalitionTest, StructureCanonicalForm) {
  const CoalitionStructure p({{1}, {0}});
  EXPECT_TRUE(p == CoalitionStructure::Selfish(2));
  EXPECT_EQ(p.describe(), "{1},{2}");
  EXPECT_EQ(CoalitionStructure::Grand(2).describe(), "{1,2}");
  EXPECT_THROW(CoalitionStructure({{0}, {0, 1}}).check_partition_of(2),
               InvalidParameters);
}

TEST(CoalitionTest, UnfairnessSingletonIsZero) {
  const Game g = PdVariant();
  const auto aggs = uniform_aggravation(linear(), 2);
  EXPECT_EQ(unfairness(g, {0, 1}, {0}, aggs), 0.0);
}

TEST(CoalitionTest, UnfairnessGrand) {
  const Game g = PdVariant();
  const auto aggs = uniform_aggravation(linear(), 2);
  EXPECT_DOUBLE_EQ(unfairness(g, {0, 0}, {0, 1}, aggs), 0.0);
  EXPECT_DOUBLE_EQ(unfairness(g, {0, 1}, {0, 1}, aggs), 19.0);
}

TEST(CoalitionTest, NegativePayoffBelowWelfareIsDomainError) {
  const Game g({"A", "B"}, {{"x"}, {"y"}}, {{5, -1}});
  const auto aggs = uniform_aggravation(linear(), 2);
  try {
    unfairness(g, {0, 0}, {0, 1}, aggs);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.member(), 0);
  }
}

TEST(CoalitionTest, PdVariantFairSets) {
  const Game g = PdVariant();
  const auto aggs = uniform_aggravation(linear(), 2);
  const Block grand{0, 1};
  EXPECT_EQ(ChoicesOf(fair_set(g, grand, aggs)),
            (std::vector<std::vector<std::size_t>>{{0, 0}, {1, 1}}));
  EXPECT_EQ(ChoicesOf(max_fair(g, grand, aggs)),
            (std::vector<std::vector<std::size_t>>{{0, 0}}));
}

TEST(CoalitionTest, PdVariantGeneratedGame) {
  const Game g = PdVariant();
  const auto gen = generate_game(g, CoalitionStructure::Grand(2),
                                 uniform_aggravation(linear(), 2));
  ASSERT_EQ(gen.game.num_players(), 1u);
  ASSERT_EQ(gen.game.num_strategies(0), 1u);
  EXPECT_EQ(gen.game.payoff_at(0), std::vector<double>{20});
  EXPECT_EQ(gen.to_base(PureProfile{0}), (PureProfile{0, 0}));
}

TEST(CoalitionTest, SelfishGeneratedGameKeepsUndominated) {
  // Strategy B pays at most 1, A at least 2: A super-dominates B.
  const Game g({"R", "C"}, {{"A", "B"}, {"L", "M"}},
               {{2, 1}, {3, 1}, {0, 1}, {1, 1}});
  const auto gen = generate_game(g, CoalitionStructure::Selfish(2),
                                 uniform_aggravation(linear(), 2));
  EXPECT_EQ(gen.game.num_strategies(0), 1u);
  EXPECT_EQ(gen.game.num_strategies(1), 2u);
}

TEST(CoalitionTest, SuperDominanceNeedsStrictGap) {
  const Game g({"R", "C"}, {{"A", "B"}, {"L", "M"}},
               {{2, 0}, {3, 0}, {1, 0}, {2, 0}});
  const CoalitionProfile a{{0}, {0}}, b{{0}, {1}};
  EXPECT_FALSE(super_dominates(g, a, b));  // min 2 vs max 2
}

TEST(CoalitionTest, FairSetGivenContext) {
  const Game g({"A", "B", "C"}, {{"0", "1"}, {"0", "1"}, {"0", "1"}},
               [] {
                 std::vector<std::vector<double>> t;
                 for (int k = 0; k < 8; ++k) {
                   const int a = k >> 2, b = (k >> 1) & 1, c = k & 1;
                   t.push_back({double(a + c), double(b + 2 * c), 1.0});
                 }
                 return t;
               }());
  const auto aggs = uniform_aggravation(linear(), 3);
  // With C at 0, equal payoffs come from matching choices.
  const auto fair = fair_set_given(g, {0, 1}, aggs, {0, 0, 0});
  EXPECT_EQ(ChoicesOf(fair),
            (std::vector<std::vector<std::size_t>>{{0, 0}, {1, 1}}));
}

TEST(CoalitionProperty, MatchesBruteForceOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto sizes = testing::random_sizes(rng, n, 3);
    const Game g = trial % 2 ? testing::random_integer_game(rng, sizes, 4)
                             : testing::random_real_game(rng, sizes);
    const auto aggs = uniform_aggravation(linear(), n);
    for (const auto& partition : enumerate_partitions(n)) {
      for (const Block& block : partition.blocks()) {
        EXPECT_EQ(ChoicesOf(fair_set(g, block, aggs)),
                  testing::oracle_fair(g, block, aggs, kDefaultTolerance))
            << "trial " << trial;
        EXPECT_EQ(ChoicesOf(max_fair(g, block, aggs)),
                  testing::oracle_max_fair(g, block, aggs, kDefaultTolerance))
            << "trial " << trial;
      }
    }
  }
}

}  // namespace
}  // namespace coopeq
