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

// Acceptance checks. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <typeinfo>
#include <vector>

#include "coopeq/coalition.hpp"
#include "coopeq/cooperative.hpp"
#include "coopeq/errors.hpp"
#include "coopeq/fehr_schmidt.hpp"
#include "coopeq/game_io.hpp"
#include "coopeq/nash.hpp"
#include "coopeq/parametric.hpp"
#include "coopeq/stats.hpp"
#include "support/fairness_oracle.hpp"
#include "support/nash_oracle.hpp"
#include "support/random_games.hpp"
#include "support/rank_oracle.hpp"

namespace coopeq {
namespace {

using Clock = std::chrono::steady_clock;

// Collects the first failure message of a criterion.
struct Check {
  std::string failure;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  void near(double got, double want, double tol, const std::string& what) {
    expect(std::abs(got - want) <= tol,
           what + ": got " + std::to_string(got) + ", want " +
               std::to_string(want));
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_ms;
  std::function<void(Check&)> body;
};

std::vector<std::vector<std::size_t>> choices_of(
    const std::vector<CoalitionProfile>& profiles) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : profiles) out.push_back(p.choices);
  std::sort(out.begin(), out.end());
  return out;
}

AggravationProfile linear2() { return uniform_aggravation(linear(), 2); }

void pd_variant_fairness(Check& c) {
  const Game g = load_game(std::string(COOPEQ_SOURCE_DIR) + "/games/pd_variant.json");
  const auto aggs = linear2();
  const Block grand{0, 1};
  c.expect(choices_of(fair_set(g, grand, aggs)) ==
               std::vector<std::vector<std::size_t>>{{0, 0}, {1, 1}},
           "fair set of the grand coalition is not {(C,C),(D,D)}");
  c.expect(choices_of(max_fair(g, grand, aggs)) ==
               std::vector<std::vector<std::size_t>>{{0, 0}},
           "undominated fair set is not {(C,C)}");
  const auto gen = generate_game(g, CoalitionStructure::Grand(2), aggs);
  c.expect(gen.game.num_players() == 1 && gen.game.num_strategies(0) == 1,
           "generated game is not one player with one strategy");
  if (gen.game.num_players() == 1 && gen.game.num_strategies(0) == 1) {
    c.expect(gen.game.payoff({0}) == std::vector<double>{20},
             "generated game does not pay 20");
  }
}

void xstar_values(Check& c) {
  for (const auto& [cp, want] :
       std::vector<std::pair<double, double>>{{1.0, 0.5}, {0.5, 2.0 / 3.0}}) {
    const auto start = Clock::now();
    const double x = solve_xstar(scaled_linear(cp), linear());
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    c.near(x, 1.0 / (1.0 + cp), 1e-9, "x* against 1/(1+c)");
    c.near(x, want, 1e-9, "x*");
    c.expect(ms < 1.0, "solve_xstar took " + std::to_string(ms) + " ms");
  }
}

std::string label(const Game& g, const PureProfile& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + g.strategies(i)[s[i]];
  }
  return out;
}

// Single pure cooperative equilibrium of `g`, or an empty string.
std::string unique_pure_equilibrium(const Game& g, const CooperativeResult& r) {
  if (r.approximate || r.equilibria.size() != 1 || !r.equilibria[0].pure) {
    return "";
  }
  return label(g, *r.equilibria[0].pure);
}

void ultimatum_values(Check& c) {
  const UgSolution s = ug_solution(40, linear(), linear());
  c.near(s.x_star, 0.5, 1e-9, "x*");
  c.near(s.tau_stay, 0.5, 1e-9, "recipient tau for the grand coalition");
  c.near(s.v_proposer, 20, 1e-9, "v_P");
  c.near(s.v_recipient, 10, 1e-9, "v_R");
  c.near(s.b_dictator, 30, 1e-9, "b_D");
  c.near(s.b_recipient, 10, 1e-9, "b_R");
  c.near(s.donation_cap, 10, 1e-9, "donation cap");
  c.near(s.offer, 10, 1e-9, "offer");

  const Game g = make_ultimatum_game(40, 20);
  const auto r = cooperative_equilibria(g, linear2());
  c.expect(r.p_star.is_grand(), "p* of the discretized game is not grand");
  c.expect(r.floor.size() == 2, "floor size");
  if (r.floor.size() == 2) {
    c.near(r.floor[0], s.v_proposer, 1e-9, "proposer floor");
    c.near(r.floor[1], s.v_recipient, 1e-9, "recipient floor");
  }
  c.expect(unique_pure_equilibrium(g, r) == "10,Accept",
           "cooperative equilibrium is not the unique (10,Accept)");
}

void bargaining_values(Check& c) {
  const auto s = nbp_solution(1, linear(), linear());
  c.expect(s.claims[0] == 0.5 && s.claims[1] == 0.5, "claims are not (0.5,0.5)");
  const Game g = make_bargaining_game(1, 20);
  const auto r = cooperative_equilibria(g, linear2());
  c.expect(unique_pure_equilibrium(g, r) == "0.5,0.5",
           "discretized bargaining equilibrium is not (0.5,0.5)");
}

void inequity_rows(Check& c) {
  const auto rows = belief_rows(40);
  const double offers[] = {0, 10, 16, 17.78};
  c.expect(rows.size() == 4, "four rows");
  for (std::size_t k = 0; k < rows.size() && k < 4; ++k) {
    c.expect(rows[k].donation == 0, "row donation");
    c.near(rows[k].offer, offers[k], 0.01, "row offer");
  }
  // Types with beta < 1/2 never pair a zero donation with the equal split.
  std::vector<FsType> beliefs = reference_belief_types();
  for (double a = 0; a <= 10; a += 0.5) beliefs.push_back({a, 0});
  for (double alpha = 0; alpha <= 10; alpha += 0.25) {
    for (double beta = 0; beta < 0.5 && beta <= alpha; beta += 0.05) {
      const FsType t{alpha, beta};
      const double donation = fs_dictator_donation(30, 10, t).donation;
      for (const FsType& belief : beliefs) {
        const double offer = fs_proposer_offer(40, t, belief).offer;
        c.expect(!(donation == 0 && offer == 20),
                 "a type with beta < 1/2 gives (0, 20)");
      }
    }
  }
}

bool same_outcome(const CooperativeResult& a, const CooperativeResult& b,
                  double factor) {
  if (!(a.p_star == b.p_star) || a.approximate != b.approximate) return false;
  std::set<PureProfile> pa, pb;
  for (const auto& e : a.equilibria) {
    if (e.pure) pa.insert(*e.pure);
  }
  for (const auto& e : b.equilibria) {
    if (e.pure) pb.insert(*e.pure);
  }
  if (pa != pb) return false;
  for (std::size_t k = 0; k < a.partitions.size(); ++k) {
    for (std::size_t i = 0; i < a.partitions[k].players.size(); ++i) {
      const auto& va = a.partitions[k].players[i];
      const auto& vb = b.partitions[k].players[i];
      if (std::abs(va.tau.deviate - vb.tau.deviate) > 1e-9) return false;
      if (std::abs(factor * va.value - vb.value) > 1e-9) return false;
    }
  }
  return true;
}

void properties(Check& c) {
  // a. fairness and super-dominance against brute force.
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto sizes = testing::random_sizes(rng, n, 3);
    const Game g = trial % 2 ? testing::random_integer_game(rng, sizes, 4)
                             : testing::random_real_game(rng, sizes);
    const auto aggs = uniform_aggravation(linear(), n);
    for (const auto& partition : enumerate_partitions(n)) {
      for (const Block& block : partition.blocks()) {
        c.expect(choices_of(fair_set(g, block, aggs)) ==
                     testing::oracle_fair(g, block, aggs, kDefaultTolerance),
                 "a: fair set differs from oracle in trial " +
                     std::to_string(trial));
        c.expect(choices_of(max_fair(g, block, aggs)) ==
                     testing::oracle_max_fair(g, block, aggs, kDefaultTolerance),
                 "a: undominated set differs from oracle in trial " +
                     std::to_string(trial));
      }
    }
  }

  // b. equilibria against the grid oracle.
  rng.seed(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = trial % 2 ? 3 : 2;
    const Game g = testing::random_real_game(rng, {m, m});
    c.expect(testing::same_equilibria(bimatrix_equilibria(g).equilibria,
                                      testing::oracle_equilibria(g), 1e-3),
             "b: equilibrium sets differ in trial " + std::to_string(trial));
  }

  // c. tau surrogates of the two axioms.
  rng.seed(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sizes = testing::random_sizes(rng, 2, 3);
    const Game g = trial % 2 ? testing::random_integer_game(rng, sizes)
                             : testing::random_real_game(rng, sizes);
    for (const auto& pv : analyze_partitions(g, linear2())) {
      for (const auto& v : pv.players) {
        c.expect(v.tau.incentive != 0.0 || v.tau.deviate == 0.0,
                 "c: I = 0 but tau > 0");
        c.expect(!(v.tau.loss > 0.0) || v.tau.deviate < 1.0,
                 "c: L > 0 but tau = 1");
      }
    }
  }

  // d. scale invariance.
  rng.seed(31);
  int solved = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto sizes = testing::random_sizes(rng, 2, 3);
    const Game g = trial % 2 ? testing::random_integer_game(rng, sizes)
                             : testing::random_real_game(rng, sizes);
    std::optional<CooperativeResult> base;
    std::string base_error;
    try {
      base = cooperative_equilibria(g, linear2());
      ++solved;
    } catch (const Error& e) {
      base_error = typeid(e).name();
    }
    for (double factor : {0.5, 2.0, 10.0}) {
      const Game scaled = scale_payoffs(g, factor);
      try {
        const auto r = cooperative_equilibria(scaled, linear2());
        c.expect(base && same_outcome(*base, r, factor),
                 "d: scaling by " + std::to_string(factor) +
                     " changed the outcome in trial " + std::to_string(trial));
      } catch (const Error& e) {
        c.expect(!base && base_error == typeid(e).name(),
                 "d: scaling changed the failure in trial " +
                     std::to_string(trial));
      }
    }
  }

  c.note = "scale check on " + std::to_string(solved) +
           " solvable games of 50";

  // e. statistics.
  rng.seed(2024);
  std::uniform_int_distribution<int> tied(0, 6);
  for (int checked = 0; checked < 100;) {
    const std::size_t n = 3 + rng() % 30;
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = tied(rng);
    for (auto& v : y) v = tied(rng);
    if (std::count(x.begin(), x.end(), x[0]) == static_cast<long>(n) ||
        std::count(y.begin(), y.end(), y[0]) == static_cast<long>(n)) {
      continue;
    }
    c.near(spearman(x, y).rho, testing::rank_formula_rho(x, y), 1e-12,
           "e: spearman vs rank formula");
    ++checked;
  }
  rng.seed(11);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(6), b(6);
    for (auto& v : a) v = noise(rng);
    for (auto& v : b) v = noise(rng) + 0.25 * (trial % 8);
    c.near(wilcoxon_rank_sum(a, b, Alternative::kTwoSided, RankSumMethod::kExact)
               .p_value,
           wilcoxon_rank_sum(a, b, Alternative::kTwoSided, RankSumMethod::kNormal)
               .p_value,
           0.05, "e: exact vs normal rank-sum p");
  }
  rng.seed(3);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> d(15), p(15);
    for (auto& v : d) v = u(rng);
    for (auto& v : p) v = u(rng);
    const auto fit = linear_fit(d, p);
    c.expect(mse(fit.c0, fit.c1, d, p) <= mse(10, 1, d, p),
             "e: fitted line loses to the model line");
  }
}

void synthetic_replay(Check& c) {
  std::vector<SubjectRecord> records;
  for (int k = 0; k < 57; ++k) {
    const double d = (k % 11) * 2.0;
    records.push_back({"s" + std::to_string(k), "1", d + 10, d});
  }
  for (int k = 0; k < 43; ++k) {
    records.push_back({"e" + std::to_string(k), "1", 20, 0});
  }
  const auto a = analyze_treatment(records);
  c.expect(a.removed == 43, "removed count");
  c.expect(a.filtered.n == 57 && a.filtered.exact_predictions == 57,
           "filtered exact-prediction share is not 100%");
  c.expect(a.filtered.spearman && a.filtered.spearman->rho == 1.0,
           "filtered rho is not 1");
  c.expect(a.filtered.fit && a.filtered.fit->c0 == 10 && a.filtered.fit->c1 == 1,
           "filtered fit is not (10, 1)");
}

void discretization(Check& c) {
  for (std::size_t steps : {20u, 40u, 80u}) {
    const Game g = make_ultimatum_game(40, steps);
    const auto r = cooperative_equilibria(g, linear2());
    c.expect(unique_pure_equilibrium(g, r) == "10,Accept",
             "offer is not 10 at " + std::to_string(steps) + " steps");
  }
}

}  // namespace
}  // namespace coopeq

int main() {
  using namespace coopeq;
  const std::vector<Criterion> criteria = {
      {1, "prisoner's dilemma variant fair sets and generated game", 1000, pd_variant_fairness},
      {2, "x* for linear and scaled-linear aggravation", 1000, xstar_values},
      {3, "ultimatum values at b=40 and pipeline cross-check", 5000, ultimatum_values},
      {4, "bargaining claims and pipeline cross-check", 5000, bargaining_values},
      {5, "inequity-aversion rows and consistency sweep", 1000, inequity_rows},
      {6, "property suites a-e", 60000, properties},
      {7, "synthetic cohort replay", 1000, synthetic_replay},
      {8, "ultimatum offer under grid refinement", 10000, discretization},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    check.expect(ms < cr.budget_ms, "over the time budget");
    const bool ok = check.failure.empty();
    failed += ok ? 0 : 1;
    std::string detail = ok ? check.note : check.failure;
    if (!detail.empty()) detail = "; " + detail;
    std::printf("%s criterion %d: %s (%.1f ms)%s\n", ok ? "PASS" : "FAIL",
                cr.id, cr.name.c_str(), ms, detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
