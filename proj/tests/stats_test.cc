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

#include "coopeq/stats.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "coopeq/errors.hpp"
#include "support/rank_oracle.hpp"

namespace coopeq {
namespace {

std::vector<double> tied_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> value(0, 6);
  std::vector<double> out(n);
  for (auto& v : out) v = value(rng);
  return out;
}

bool constant(const std::vector<double>& v) {
  for (double w : v) {
    if (w != v.front()) return false;
  }
  return true;
}

TEST(MidranksTest, Ties) {
  EXPECT_EQ(midranks({10, 20, 10, 30}), (std::vector<double>{1.5, 3, 1.5, 4}));
  EXPECT_EQ(midranks({5, 5, 5}), (std::vector<double>{2, 2, 2}));
}

TEST(SpearmanTest, Examples) {
  EXPECT_DOUBLE_EQ(spearman({1, 2, 3}, {2, 4, 9}).rho, 1.0);
  EXPECT_DOUBLE_EQ(spearman({1, 2, 3}, {9, 4, 2}).rho, -1.0);
  EXPECT_NEAR(spearman({1, 2, 3, 4}, {1, 3, 2, 4}).rho, 0.8, 1e-12);
}

TEST(SpearmanTest, PValueFromT) {
  const auto r = spearman({1, 2, 3, 4}, {1, 3, 2, 4});
  // t = 0.8 * sqrt(2 / 0.36) with 2 degrees of freedom.
  const double t = 0.8 * std::sqrt(2.0 / 0.36);
  const double expected = 1.0 - t / std::sqrt(2.0 + t * t);
  EXPECT_NEAR(r.p_value, expected, 1e-12);
}

TEST(SpearmanTest, Errors) {
  EXPECT_THROW(spearman({1, 2}, {1, 2}), DegenerateInput);
  EXPECT_THROW(spearman({1, 1, 1}, {1, 2, 3}), DegenerateInput);
  EXPECT_THROW(spearman({1, 2, 3}, {1, 2}), InvalidParameters);
}

TEST(SpearmanTest, MatchesRankFormulaOnTiedData) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = 3 + rng() % 30;
    const auto x = tied_series(rng, n);
    const auto y = tied_series(rng, n);
    if (constant(x) || constant(y)) continue;
    EXPECT_NEAR(spearman(x, y).rho, testing::rank_formula_rho(x, y), 1e-12);
    ++checked;
  }
}

TEST(SpearmanTest, MonotoneTransformInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = tied_series(rng, 12);
    const auto y = tied_series(rng, 12);
    if (constant(x) || constant(y)) continue;
    std::vector<double> fx;
    for (double v : x) fx.push_back(std::exp(v));
    EXPECT_NEAR(spearman(fx, y).rho, spearman(x, y).rho, 1e-12);
  }
}

TEST(SpearmanExactTest, PerfectOrderOfFour) {
  // 2 of the 24 orderings reach |rho| = 1.
  EXPECT_NEAR(spearman_exact_p({1, 2, 3, 4}, {1, 2, 3, 4}), 2.0 / 24.0, 1e-12);
  std::vector<double> big(11, 0.0);
  for (std::size_t k = 0; k < big.size(); ++k) big[k] = k;
  EXPECT_THROW(spearman_exact_p(big, big), SizeLimit);
}

TEST(WilcoxonTest, ExactSmallSample) {
  const auto r = wilcoxon_rank_sum({1, 2}, {10, 11});
  EXPECT_TRUE(r.exact);
  EXPECT_NEAR(r.p_value, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(r.statistic, 3.0);
  EXPECT_NEAR(wilcoxon_rank_sum({1, 2}, {10, 11}, Alternative::kLess).p_value,
              1.0 / 6.0, 1e-12);
}

TEST(WilcoxonTest, IdenticalSamples) {
  const auto r = wilcoxon_rank_sum({1, 2, 3}, {1, 2, 3});
  EXPECT_EQ(r.statistic, r.expected);
  EXPECT_GE(r.p_value, 0.99);
  std::vector<double> many;
  for (int k = 0; k < 40; ++k) many.push_back(k % 7);
  EXPECT_GE(wilcoxon_rank_sum(many, many).p_value, 0.99);
}

TEST(WilcoxonTest, ExactAgreesWithNormalAtSixAndSix) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(6), b(6);
    const double shift = 0.25 * (trial % 8);
    for (auto& v : a) v = noise(rng);
    for (auto& v : b) v = noise(rng) + shift;
    const double exact =
        wilcoxon_rank_sum(a, b, Alternative::kTwoSided, RankSumMethod::kExact)
            .p_value;
    const double normal =
        wilcoxon_rank_sum(a, b, Alternative::kTwoSided, RankSumMethod::kNormal)
            .p_value;
    EXPECT_NEAR(exact, normal, 0.05);
  }
}

TEST(WilcoxonTest, Limits) {
  EXPECT_THROW(wilcoxon_rank_sum({}, {1}), InvalidParameters);
  std::vector<double> a(13, 1.0), b(12, 2.0);
  EXPECT_THROW(
      wilcoxon_rank_sum(a, b, Alternative::kTwoSided, RankSumMethod::kExact),
      SizeLimit);
  EXPECT_FALSE(wilcoxon_rank_sum(a, b).exact);
}

TEST(LinearFitTest, Examples) {
  const auto line = linear_fit({0, 1, 2, 3}, {1, 3, 5, 7});
  EXPECT_NEAR(line.c0, 1, 1e-12);
  EXPECT_NEAR(line.c1, 2, 1e-12);
  const auto two = linear_fit({0, 10}, {10, 20});
  EXPECT_NEAR(two.c0, 10, 1e-12);
  EXPECT_NEAR(two.c1, 1, 1e-12);
  EXPECT_THROW(linear_fit({0, 0, 0}, {1, 2, 3}), DegenerateInput);
}

TEST(MseTest, Examples) {
  EXPECT_DOUBLE_EQ(mse(10, 1, {0}, {20}), 100);
  EXPECT_DOUBLE_EQ(mse(10, 1, {0, 5, 10}, {10, 15, 20}), 0);
}

TEST(MseTest, FitBeatsAnyLine) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> d(15), p(15);
    for (auto& v : d) v = u(rng);
    for (auto& v : p) v = u(rng);
    const auto fit = linear_fit(d, p);
    const double best = mse(fit.c0, fit.c1, d, p);
    EXPECT_LE(best, mse(10, 1, d, p) + 1e-9);
    EXPECT_LE(best, mse(u(rng), u(rng) / 10.0, d, p) + 1e-9);
  }
}

SubjectRecord rec(std::string id, double offer, double donation) {
  return {std::move(id), "1", offer, donation};
}

TEST(FilterTest, RemovesOnlyEqualSplitZeroDonation) {
  const std::vector<SubjectRecord> records = {
      rec("a", 20, 0), rec("b", 20, 10), rec("c", 10, 0), rec("d", 20, 0)};
  const auto f = filter_inconsistent(records);
  ASSERT_EQ(f.removed.size(), 2u);
  EXPECT_EQ(f.removed[0].subject, "a");
  EXPECT_EQ(f.removed[1].subject, "d");
  ASSERT_EQ(f.kept.size(), 2u);
  EXPECT_EQ(f.kept[0].subject, "b");
  EXPECT_EQ(f.kept[1].subject, "c");
  EXPECT_EQ(filter_inconsistent(records, 10, 0).removed.size(), 1u);
}

std::vector<SubjectRecord> synthetic_cohort() {
  std::vector<SubjectRecord> out;
  for (int k = 0; k < 57; ++k) {
    const double d = (k % 11) * 2.0;
    out.push_back(rec("s" + std::to_string(k), d + 10, d));
  }
  for (int k = 0; k < 43; ++k) out.push_back(rec("e" + std::to_string(k), 20, 0));
  return out;
}

TEST(AnalyzeTreatmentTest, SyntheticCohort) {
  const auto a = analyze_treatment(synthetic_cohort());
  EXPECT_EQ(a.removed, 43u);
  EXPECT_EQ(a.all.n, 100u);
  EXPECT_EQ(a.all.inconsistent, 43u);
  EXPECT_EQ(a.filtered.n, 57u);
  EXPECT_EQ(a.filtered.exact_predictions, 57u);
  ASSERT_TRUE(a.filtered.spearman);
  EXPECT_EQ(a.filtered.spearman->rho, 1.0);
  ASSERT_TRUE(a.filtered.fit);
  EXPECT_NEAR(a.filtered.fit->c0, 10, 1e-12);
  EXPECT_NEAR(a.filtered.fit->c1, 1, 1e-12);
  EXPECT_EQ(*a.filtered.mse_model, 0.0);
  EXPECT_LE(*a.all.mse_fitting, *a.all.mse_model);
  EXPECT_TRUE(a.filtered.degenerate.empty());
}

TEST(AnalyzeTreatmentTest, EmptyAfterFiltering) {
  const auto a = analyze_treatment({rec("a", 20, 0), rec("b", 20, 0)});
  EXPECT_EQ(a.filtered.n, 0u);
  EXPECT_FALSE(a.filtered.mean_offer);
  EXPECT_FALSE(a.filtered.spearman);
  EXPECT_FALSE(a.filtered.degenerate.empty());
}

TEST(AnalyzeTreatmentTest, SingleRecord) {
  const auto a = analyze_treatment({rec("a", 15, 5)});
  EXPECT_EQ(*a.all.mean_offer, 15);
  EXPECT_EQ(*a.all.mean_donation, 5);
  EXPECT_FALSE(a.all.spearman);
  EXPECT_EQ(a.all.exact_predictions, 1u);
  EXPECT_FALSE(a.all.degenerate.empty());
}

TEST(GroupTest, KeepsFirstAppearanceOrder) {
  std::vector<SubjectRecord> records = {{"a", "2", 1, 1}, {"b", "1", 1, 1},
                                        {"c", "2", 1, 1}};
  const auto groups = group_by_treatment(records);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].treatment, "2");
  EXPECT_EQ(groups[0].records.size(), 2u);
  EXPECT_EQ(groups[1].treatment, "1");
}

}  // namespace
}  // namespace coopeq
