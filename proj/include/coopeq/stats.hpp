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

#ifndef COOPEQ_STATS_HPP_
#define COOPEQ_STATS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coopeq {

// Average ranks (1-based), ties sharing their mean rank.
std::vector<double> midranks(const std::vector<double>& values);

struct CorrelationResult {
  double rho = 0.0;
  double p_value = 1.0;
};

// Pearson correlation of mid-ranks; two-sided p-value from the t
// approximation with n - 2 degrees of freedom. Throws InvalidParameters on a
// length mismatch and DegenerateInput for n < 3 or a constant series.
CorrelationResult spearman(const std::vector<double>& x,
                           const std::vector<double>& y);

inline constexpr std::size_t kMaxExactSpearman = 10;

// Two-sided permutation p-value of spearman's rho. Throws SizeLimit above 10
// observations.
double spearman_exact_p(const std::vector<double>& x,
                        const std::vector<double>& y);

enum class Alternative { kTwoSided, kLess, kGreater };
enum class RankSumMethod { kAuto, kExact, kNormal };

inline constexpr std::size_t kExactRankSumAuto = 12;
inline constexpr std::size_t kExactRankSumMax = 24;

struct RankSumResult {
  // Sum of the mid-ranks of the first sample.
  double statistic = 0.0;
  double expected = 0.0;
  double p_value = 1.0;
  bool exact = false;
};

// Wilcoxon rank-sum test. kAuto enumerates exactly for at most 12 pooled
// observations and otherwise uses the normal approximation with tie-corrected
// variance and continuity correction. kLess tests whether the first sample
// tends to be smaller.
RankSumResult wilcoxon_rank_sum(const std::vector<double>& a,
                                const std::vector<double>& b,
                                Alternative alternative = Alternative::kTwoSided,
                                RankSumMethod method = RankSumMethod::kAuto);

struct LinearFit {
  double c0 = 0.0;
  double c1 = 0.0;
};

// Least squares for p = c1 * d + c0. Throws DegenerateInput when fewer than
// two points or all d are equal.
LinearFit linear_fit(const std::vector<double>& d, const std::vector<double>& p);

// Mean of (p - c1 d - c0)^2. Throws DegenerateInput on empty input.
double mse(double c0, double c1, const std::vector<double>& d,
           const std::vector<double>& p);

// Currency fields are in cents.
struct SubjectRecord {
  std::string subject;
  std::string treatment;
  double ug_offer = 0.0;
  double dg_donation = 0.0;

  bool operator==(const SubjectRecord&) const = default;
};

struct FilterResult {
  std::vector<SubjectRecord> kept;
  std::vector<SubjectRecord> removed;
};

inline constexpr double kEqualSplit = 20.0;
inline constexpr double kZeroDonation = 0.0;

// Removes the records offering exactly `equal_split` while donating exactly
// `zero`.
FilterResult filter_inconsistent(const std::vector<SubjectRecord>& records,
                                 double equal_split = kEqualSplit,
                                 double zero = kZeroDonation);

struct TreatmentReport {
  std::size_t n = 0;
  std::optional<double> mean_offer;
  std::optional<double> mean_donation;
  std::optional<CorrelationResult> spearman;
  std::optional<LinearFit> fit;
  std::optional<double> mse_fitting;
  std::optional<double> mse_model;
  std::size_t exact_predictions = 0;
  std::size_t inconsistent = 0;
  // One entry per statistic that could not be computed.
  std::vector<std::string> degenerate;
};

struct TreatmentAnalysis {
  TreatmentReport all;
  TreatmentReport filtered;
  std::size_t removed = 0;
};

inline constexpr double kModelIntercept = 10.0;
inline constexpr double kModelSlope = 1.0;

TreatmentAnalysis analyze_treatment(const std::vector<SubjectRecord>& records,
                                    double model_c0 = kModelIntercept,
                                    double model_c1 = kModelSlope,
                                    double equal_split = kEqualSplit,
                                    double zero = kZeroDonation);

struct TreatmentGroup {
  std::string treatment;
  std::vector<SubjectRecord> records;
};

// Records grouped by treatment tag in order of first appearance.
std::vector<TreatmentGroup> group_by_treatment(
    const std::vector<SubjectRecord>& records);

// Published summary values of the original experiment, for side-by-side
// display only.
struct ReferenceRow {
  std::string treatment;
  std::string subset;
  double mean_offer;
  double mean_donation;
  double rho;
  double c0;
  double c1;
  double mse_fitting;
  double mse_model;
};

std::vector<ReferenceRow> reference_rows();

// Published rank-sum p-value for donations, treatment 1 against 2.
inline constexpr double kReferenceDonationRankSumP = 0.1969;

}  // namespace coopeq

#endif  // COOPEQ_STATS_HPP_
