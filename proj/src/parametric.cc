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

#include "coopeq/parametric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "coopeq/errors.hpp"
#include "coopeq/nash.hpp"

namespace coopeq {

namespace {

void require_budget(double budget) {
  if (!(budget > 0.0) || !std::isfinite(budget)) {
    throw InvalidParameters("budget must be positive");
  }
}

}  // namespace

double solve_xstar(const AggravationFunction& agg_proposer,
                   const AggravationFunction& agg_recipient, double tol) {
  if (!(tol > 0.0)) throw InvalidParameters("tolerance must be positive");
  auto f = [&](double x) {
    return agg_proposer(1.0, 1.0 - x) - agg_recipient(1.0, x);
  };
  double lo = 0.0;
  double hi = 1.0;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw SolverFailure("aggravation difference does not change sign on [0, 1]");
  }
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (std::abs(f_mid) <= tol && hi - lo <= tol) return mid;
    if (f_mid == 0.0) return mid;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  if (std::abs(f(mid)) <= tol) return mid;
  throw SolverFailure("bisection did not converge");
}

UgSolution ug_solution(double budget, const AggravationFunction& agg_proposer,
                       const AggravationFunction& agg_recipient,
                       std::optional<double> tau_stay, double tol) {
  require_budget(budget);
  UgSolution out;
  out.budget = budget;
  out.x_star = solve_xstar(agg_proposer, agg_recipient, tol);
  const double x = out.x_star;
  if (tau_stay) {
    if (!(*tau_stay >= 0.0 && *tau_stay <= 1.0)) {
      throw InvalidParameters("tau must lie in [0, 1]");
    }
    out.tau_stay = *tau_stay;
    out.tau_source = TauSource::kUserSupplied;
  } else {
    // The proposer abandons the fair split x* for offer 0; the recipient
    // answers by rejecting.
    out.incentive = agg_proposer(1.0, 1.0 - x);
    out.loss = agg_proposer(1.0 - x, 0.0);
    out.tau_stay = deviation_parameters(out.incentive, out.loss).stay;
  }
  out.v_proposer = budget * (1.0 - x);
  out.v_recipient = budget * x * out.tau_stay;
  out.b_dictator = budget * (1.0 - x * out.tau_stay);
  out.b_recipient = out.v_recipient;
  out.donation_cap = budget * x * (1.0 - out.tau_stay);
  out.offer = out.v_recipient;
  return out;
}

OfferPrediction ug_predict_offer(double budget, double x_star, double tau_stay,
                                 double donation) {
  require_budget(budget);
  if (!(x_star > 0.0 && x_star < 1.0)) {
    throw InvalidParameters("x* must lie in (0, 1)");
  }
  if (!(tau_stay >= 0.0 && tau_stay <= 1.0)) {
    throw InvalidParameters("tau must lie in [0, 1]");
  }
  if (!(donation >= 0.0) || !std::isfinite(donation)) {
    throw InvalidParameters("donation must be nonnegative");
  }
  OfferPrediction out;
  out.cap = budget * x_star * (1.0 - tau_stay);
  out.cap_exceeded = donation > out.cap + 1e-9;
  out.offer = budget * x_star * tau_stay + donation;
  return out;
}

NbpSolution nbp_solution(double budget, const AggravationFunction& agg_first,
                         const AggravationFunction& agg_second, double tol) {
  require_budget(budget);
  NbpSolution out;
  out.budget = budget;
  out.x_star = solve_xstar(agg_first, agg_second, tol);
  out.claims[0] = budget * out.x_star;
  out.claims[1] = budget - out.claims[0];
  return out;
}

PurifiabilityReport check_purifiable(const Game& game, std::size_t samples,
                                     std::uint64_t seed, double tol) {
  require_valid(game);
  PurifiabilityReport out;
  out.samples = samples;
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp1(1.0);
  const std::size_t n = game.num_players();

  for (std::size_t sample = 0; sample < samples; ++sample) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = game.num_strategies(i);
      Distribution mix(m);
      double total = 0.0;
      for (auto& w : mix) total += (w = exp1(rng));
      for (auto& w : mix) w /= total;

      // mixed[k] and pure[s][k]: payoff against the k-th opponent profile.
      std::vector<double> mixed;
      std::vector<std::vector<double>> pure(m);
      for (std::size_t k = 0; k < game.num_profiles(); ++k) {
        const PureProfile s = game.profile_at(k);
        if (s[i] != 0) continue;
        PureProfile t = s;
        double value = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
          t[i] = a;
          const double u = game.payoff(t)[i];
          value += mix[a] * u;
          pure[a].push_back(u);
        }
        mixed.push_back(value);
      }
      bool found = false;
      for (std::size_t a = 0; a < m && !found; ++a) {
        found = true;
        for (std::size_t k = 0; k < mixed.size(); ++k) {
          if (pure[a][k] < mixed[k] - tol) {
            found = false;
            break;
          }
        }
      }
      if (!found) out.violations.push_back({sample, i});
    }
  }
  return out;
}

double wealth_asymmetry_xstar(double c_proposer, double tol) {
  if (!(c_proposer > 0.0) || !std::isfinite(c_proposer)) {
    throw InvalidParameters("wealth coefficient must be positive");
  }
  return solve_xstar(scaled_linear(c_proposer), linear(), tol);
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

Game make_ultimatum_game(double budget, std::size_t steps) {
  require_budget(budget);
  if (steps == 0) throw InvalidParameters("need at least one offer step");
  std::vector<double> offers;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k <= steps; ++k) {
    offers.push_back(budget * static_cast<double>(k) /
                     static_cast<double>(steps));
    labels.push_back(format_number(offers.back()));
  }
  return Game::FromFunction(
      {"Proposer", "Recipient"}, {labels, {"Accept", "Reject"}},
      [&](const PureProfile& s) -> std::vector<double> {
        if (s[1] == 1) return {0.0, 0.0};
        return {budget - offers[s[0]], offers[s[0]]};
      });
}

Game make_bargaining_game(double budget, std::size_t steps) {
  require_budget(budget);
  if (steps == 0) throw InvalidParameters("need at least one claim step");
  std::vector<double> claims;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k <= steps; ++k) {
    claims.push_back(budget * static_cast<double>(k) /
                     static_cast<double>(steps));
    labels.push_back(format_number(claims.back()));
  }
  return Game::FromFunction(
      {"Player 1", "Player 2"}, {labels, labels},
      [&](const PureProfile& s) -> std::vector<double> {
        const double a = claims[s[0]];
        const double b = claims[s[1]];
        if (a + b > budget * (1.0 + 1e-12)) return {0.0, 0.0};
        return {a, b};
      });
}

}  // namespace coopeq
