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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "coopeq/errors.hpp"

namespace coopeq {

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Pearson correlation; nullopt when either series is constant.
std::optional<double> pearson(const std::vector<double>& x,
                              const std::vector<double>& y) {
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

void require_same_length(const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw InvalidParameters("series lengths differ");
  }
}

double upper_normal(double z) {
  return boost::math::cdf(boost::math::complement(
      boost::math::normal_distribution<double>(), z));
}

}  // namespace

std::vector<double> midranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

CorrelationResult spearman(const std::vector<double>& x,
                           const std::vector<double>& y) {
  require_same_length(x, y);
  if (x.size() < 3) throw DegenerateInput("spearman needs at least 3 pairs");
  const auto rho = pearson(midranks(x), midranks(y));
  if (!rho) throw DegenerateInput("spearman undefined for a constant series");
  CorrelationResult out;
  out.rho = *rho;
  const double df = static_cast<double>(x.size()) - 2.0;
  if (std::abs(out.rho) >= 1.0) {
    out.p_value = 0.0;
    return out;
  }
  const double t = std::abs(out.rho) * std::sqrt(df / (1.0 - out.rho * out.rho));
  out.p_value = 2.0 * boost::math::cdf(boost::math::complement(
                          boost::math::students_t_distribution<double>(df), t));
  return out;
}

double spearman_exact_p(const std::vector<double>& x,
                        const std::vector<double>& y) {
  require_same_length(x, y);
  if (x.size() > kMaxExactSpearman) {
    throw SizeLimit("exact spearman limited to 10 observations");
  }
  const double observed = std::abs(spearman(x, y).rho);
  const auto rx = midranks(x);
  auto ry = midranks(y);
  std::sort(ry.begin(), ry.end());
  std::size_t hits = 0;
  std::size_t total = 0;
  // Permutations of a multiset are visited once each; every one stands for
  // the same number of index permutations.
  do {
    ++total;
    const auto rho = pearson(rx, ry);
    if (rho && std::abs(*rho) >= observed - 1e-12) ++hits;
  } while (std::next_permutation(ry.begin(), ry.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

RankSumResult wilcoxon_rank_sum(const std::vector<double>& a,
                                const std::vector<double>& b,
                                Alternative alternative, RankSumMethod method) {
  if (a.empty() || b.empty()) {
    throw InvalidParameters("rank-sum test needs two non-empty samples");
  }
  const std::size_t na = a.size();
  const std::size_t total = na + b.size();
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = midranks(pooled);

  RankSumResult out;
  out.statistic = std::accumulate(ranks.begin(), ranks.begin() + na, 0.0);
  out.expected = static_cast<double>(na) * static_cast<double>(total + 1) / 2.0;

  bool exact = method == RankSumMethod::kExact ||
               (method == RankSumMethod::kAuto && total <= kExactRankSumAuto);
  if (exact && total > kExactRankSumMax) {
    throw SizeLimit("exact rank-sum test limited to 24 observations");
  }
  const double slack = 1e-9;
  if (exact) {
    std::vector<bool> pick(total, false);
    std::fill(pick.begin(), pick.begin() + na, true);
    std::size_t count = 0, hits = 0;
    const double observed = out.statistic - out.expected;
    // prev_permutation over a descending-sorted mask visits every subset.
    do {
      double w = 0.0;
      for (std::size_t k = 0; k < total; ++k) {
        if (pick[k]) w += ranks[k];
      }
      const double diff = w - out.expected;
      ++count;
      switch (alternative) {
        case Alternative::kTwoSided:
          if (std::abs(diff) >= std::abs(observed) - slack) ++hits;
          break;
        case Alternative::kLess:
          if (diff <= observed + slack) ++hits;
          break;
        case Alternative::kGreater:
          if (diff >= observed - slack) ++hits;
          break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    out.exact = true;
    out.p_value = std::min(1.0, static_cast<double>(hits) /
                                    static_cast<double>(count));
    return out;
  }

  std::map<double, std::size_t> ties;
  for (double v : pooled) ++ties[v];
  double tie_sum = 0.0;
  for (const auto& [value, t] : ties) {
    const double td = static_cast<double>(t);
    tie_sum += td * td * td - td;
  }
  const double n = static_cast<double>(total);
  const double variance = static_cast<double>(na) *
                          static_cast<double>(b.size()) / 12.0 *
                          ((n + 1.0) - tie_sum / (n * (n - 1.0)));
  if (variance <= 0.0) {
    out.p_value = 1.0;
    return out;
  }
  const double sd = std::sqrt(variance);
  const double diff = out.statistic - out.expected;
  switch (alternative) {
    case Alternative::kTwoSided: {
      const double z = std::max(0.0, std::abs(diff) - 0.5) / sd;
      out.p_value = std::min(1.0, 2.0 * upper_normal(z));
      break;
    }
    case Alternative::kLess:
      out.p_value = 1.0 - upper_normal((diff + 0.5) / sd);
      break;
    case Alternative::kGreater:
      out.p_value = upper_normal((diff - 0.5) / sd);
      break;
  }
  return out;
}

LinearFit linear_fit(const std::vector<double>& d, const std::vector<double>& p) {
  require_same_length(d, p);
  if (d.size() < 2) throw DegenerateInput("linear fit needs two points");
  // Sums are taken about the first point so that integer data (cents) stay
  // exact and data lying on a line reproduce it exactly.
  const double n = static_cast<double>(d.size());
  double sd = 0.0, sp = 0.0, sdd = 0.0, sdp = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double x = d[k] - d[0];
    const double y = p[k] - p[0];
    sd += x;
    sp += y;
    sdd += x * x;
    sdp += x * y;
  }
  const double denom = n * sdd - sd * sd;
  if (!(denom > 0.0)) throw DegenerateInput("linear fit needs varying donations");
  LinearFit out;
  out.c1 = (n * sdp - sd * sp) / denom;
  out.c0 = (sp - out.c1 * sd) / n + p[0] - out.c1 * d[0];
  return out;
}

double mse(double c0, double c1, const std::vector<double>& d,
           const std::vector<double>& p) {
  require_same_length(d, p);
  if (d.empty()) throw DegenerateInput("mean squared error of no records");
  double total = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double r = p[k] - c1 * d[k] - c0;
    total += r * r;
  }
  return total / static_cast<double>(d.size());
}

FilterResult filter_inconsistent(const std::vector<SubjectRecord>& records,
                                 double equal_split, double zero) {
  FilterResult out;
  for (const auto& r : records) {
    const bool inconsistent = std::abs(r.ug_offer - equal_split) <= 1e-9 &&
                              std::abs(r.dg_donation - zero) <= 1e-9;
    (inconsistent ? out.removed : out.kept).push_back(r);
  }
  return out;
}

namespace {

TreatmentReport report_for(const std::vector<SubjectRecord>& records,
                           double model_c0, double model_c1,
                           double equal_split, double zero) {
  TreatmentReport out;
  out.n = records.size();
  std::vector<double> d, p;
  for (const auto& r : records) {
    d.push_back(r.dg_donation);
    p.push_back(r.ug_offer);
    if (std::abs(r.ug_offer - (model_c1 * r.dg_donation + model_c0)) <= 1e-9) {
      ++out.exact_predictions;
    }
  }
  out.inconsistent = filter_inconsistent(records, equal_split, zero).removed.size();
  if (records.empty()) {
    out.degenerate.push_back("means: no records");
  } else {
    out.mean_offer = mean(p);
    out.mean_donation = mean(d);
  }
  try {
    out.spearman = spearman(d, p);
  } catch (const DegenerateInput& e) {
    out.degenerate.push_back(std::string("spearman: ") + e.what());
  }
  try {
    out.fit = linear_fit(d, p);
    out.mse_fitting = mse(out.fit->c0, out.fit->c1, d, p);
  } catch (const DegenerateInput& e) {
    out.degenerate.push_back(std::string("fit: ") + e.what());
  }
  try {
    out.mse_model = mse(model_c0, model_c1, d, p);
  } catch (const DegenerateInput& e) {
    out.degenerate.push_back(std::string("model: ") + e.what());
  }
  return out;
}

}  // namespace

TreatmentAnalysis analyze_treatment(const std::vector<SubjectRecord>& records,
                                    double model_c0, double model_c1,
                                    double equal_split, double zero) {
  TreatmentAnalysis out;
  const auto split = filter_inconsistent(records, equal_split, zero);
  out.removed = split.removed.size();
  out.all = report_for(records, model_c0, model_c1, equal_split, zero);
  out.filtered = report_for(split.kept, model_c0, model_c1, equal_split, zero);
  return out;
}

std::vector<TreatmentGroup> group_by_treatment(
    const std::vector<SubjectRecord>& records) {
  std::vector<TreatmentGroup> out;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const TreatmentGroup& g) {
      return g.treatment == r.treatment;
    });
    if (it == out.end()) {
      out.push_back({r.treatment, {}});
      it = out.end() - 1;
    }
    it->records.push_back(r);
  }
  return out;
}

std::vector<ReferenceRow> reference_rows() {
  return {
      {"1", "all", 18.18, 5.40, 0.3412, 16.40, 0.33, 17.64, 37.05},
      {"1", "filtered", 17.60, 7.15, 0.7136, 12.53, 0.71, 14.63, 16.71},
      {"2", "all", 16.77, 5.39, 0.3322, 14.27, 0.51, 35.60, 40.73},
      {"2", "filtered", 15.91, 6.27, 0.6377, 10.95, 0.79, 23.14, 24.77},
  };
}

}  // namespace coopeq
