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

#include "coopeq/nash.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "coopeq/errors.hpp"

namespace coopeq {

std::vector<double> pure_strategy_payoffs(const Game& game, std::size_t player,
                                          const MixedProfile& profile) {
  check_distribution(game, profile);
  std::vector<double> out(game.num_strategies(player), 0.0);
  const std::size_t n = game.num_players();
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    double weight = 1.0;
    for (std::size_t j = 0; j < n && weight != 0.0; ++j) {
      if (j != player) weight *= profile[j][s[j]];
    }
    if (weight == 0.0) continue;
    out[s[player]] += weight * game.payoff_at(k)[player];
  }
  return out;
}

double best_response_value(const Game& game, std::size_t player,
                           const MixedProfile& profile) {
  const auto values = pure_strategy_payoffs(game, player, profile);
  return *std::max_element(values.begin(), values.end());
}

bool is_epsilon_equilibrium(const Game& game, const MixedProfile& profile,
                            double epsilon) {
  const auto current = expected_payoff(game, profile);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (best_response_value(game, i, profile) - current[i] > epsilon) {
      return false;
    }
  }
  return true;
}

std::vector<PureProfile> pure_equilibria(const Game& game, double tol) {
  require_valid(game);
  std::vector<PureProfile> out;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    const auto& current = game.payoff_at(k);
    bool stable = true;
    for (std::size_t i = 0; i < game.num_players() && stable; ++i) {
      PureProfile t = s;
      for (std::size_t alt = 0; alt < game.num_strategies(i); ++alt) {
        t[i] = alt;
        if (game.payoff(t)[i] > current[i] + tol) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(s);
  }
  return out;
}

namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

std::vector<std::size_t> members(unsigned long mask, std::size_t size) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < size; ++k) {
    if (mask & (1UL << k)) out.push_back(k);
  }
  return out;
}

bool near(const Distribution& a, const Distribution& b, double tol) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

void insert_unique(std::vector<Distribution>& pool, Distribution d,
                   double tol) {
  for (const auto& existing : pool) {
    if (near(existing, d, tol)) return;
  }
  pool.push_back(std::move(d));
}

// Mixed strategy of the player owning `payoff` rows, supported on `support`,
// that makes the opponent indifferent across `indifferent` columns. `payoff`
// holds the opponent's payoffs with the owner's strategies as rows.
struct SupportSolve {
  bool singular = false;
  std::optional<Distribution> strategy;
};

SupportSolve solve_support(const Matrix& payoff,
                           const std::vector<std::size_t>& support,
                           const std::vector<std::size_t>& indifferent,
                           double tol) {
  const auto unknowns = static_cast<Eigen::Index>(support.size() + 1);
  const auto equations = static_cast<Eigen::Index>(indifferent.size() + 1);
  Matrix system = Matrix::Zero(equations, unknowns);
  Vector rhs = Vector::Zero(equations);
  for (std::size_t r = 0; r < indifferent.size(); ++r) {
    for (std::size_t c = 0; c < support.size(); ++c) {
      system(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          payoff(static_cast<Eigen::Index>(support[c]),
                 static_cast<Eigen::Index>(indifferent[r]));
    }
    system(static_cast<Eigen::Index>(r), unknowns - 1) = -1.0;
  }
  for (std::size_t c = 0; c < support.size(); ++c) {
    system(equations - 1, static_cast<Eigen::Index>(c)) = 1.0;
  }
  rhs(equations - 1) = 1.0;

  SupportSolve result;
  Eigen::FullPivLU<Matrix> lu(system);
  lu.setThreshold(1e-12);
  if (lu.rank() < unknowns) {
    result.singular = true;
    return result;
  }
  const Vector z = lu.solve(rhs);
  const double scale = std::max(1.0, system.cwiseAbs().maxCoeff());
  if ((system * z - rhs).cwiseAbs().maxCoeff() > tol * scale) return result;

  Distribution strategy(static_cast<std::size_t>(payoff.rows()), 0.0);
  double total = 0.0;
  for (std::size_t c = 0; c < support.size(); ++c) {
    double p = z(static_cast<Eigen::Index>(c));
    if (p < -tol) return result;
    if (p < tol) p = 0.0;
    strategy[support[c]] = p;
    total += p;
  }
  if (total <= 0.0) return result;
  for (double& p : strategy) p /= total;
  result.strategy = std::move(strategy);
  return result;
}

}  // namespace

EquilibriumSet bimatrix_equilibria(const Game& game, double tol,
                                   std::size_t support_budget) {
  require_valid(game);
  if (game.num_players() != 2) {
    throw InvalidParameters("bimatrix_equilibria needs a two-player game");
  }
  const std::size_t rows = game.num_strategies(0);
  const std::size_t cols = game.num_strategies(1);
  if (rows > kMaxBimatrixStrategies || cols > kMaxBimatrixStrategies) {
    throw SizeLimit("support enumeration is limited to " +
                    std::to_string(kMaxBimatrixStrategies) +
                    " strategies per player");
  }
  const double pairs = (std::ldexp(1.0, static_cast<int>(rows)) - 1.0) *
                       (std::ldexp(1.0, static_cast<int>(cols)) - 1.0);
  if (pairs > static_cast<double>(support_budget)) {
    throw SizeLimit("support enumeration needs " + std::to_string(pairs) +
                    " support pairs, budget is " +
                    std::to_string(support_budget));
  }

  Matrix row_payoff(rows, cols);  // player 1
  Matrix col_payoff(rows, cols);  // player 2
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& u = game.payoff({r, c});
      row_payoff(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u[0];
      col_payoff(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u[1];
    }
  }
  const Matrix row_payoff_t = row_payoff.transpose();

  EquilibriumSet out;
  out.tolerance = tol;
  std::vector<Distribution> row_candidates;
  std::vector<Distribution> col_candidates;
  std::size_t singular = 0;
  for (unsigned long rmask = 1; rmask < (1UL << rows); ++rmask) {
    const auto row_set = members(rmask, rows);
    for (unsigned long cmask = 1; cmask < (1UL << cols); ++cmask) {
      const auto col_set = members(cmask, cols);
      // Row player's mix on row_set keeping the column player indifferent
      // over col_set, and the converse.
      auto x = solve_support(col_payoff, row_set, col_set, tol);
      if (x.singular) ++singular;
      if (x.strategy) insert_unique(row_candidates, std::move(*x.strategy), tol);
      auto y = solve_support(row_payoff_t, col_set, row_set, tol);
      if (y.singular) ++singular;
      if (y.strategy) insert_unique(col_candidates, std::move(*y.strategy), tol);
    }
  }
  if (singular > 0) {
    out.notes.push_back("skipped " + std::to_string(singular) +
                        " singular indifference systems; their solution sets "
                        "are represented by extreme points");
  }

  for (const auto& x : row_candidates) {
    for (const auto& y : col_candidates) {
      MixedProfile candidate{x, y};
      if (!is_epsilon_equilibrium(game, candidate, tol)) continue;
      const bool seen = std::any_of(
          out.equilibria.begin(), out.equilibria.end(),
          [&](const MixedProfile& e) {
            return near(e[0], x, tol) && near(e[1], y, tol);
          });
      if (!seen) out.equilibria.push_back(std::move(candidate));
    }
  }
  return out;
}

EquilibriumSet single_player_equilibria(const Game& game, double tol) {
  require_valid(game);
  if (game.num_players() != 1) {
    throw InvalidParameters("single_player_equilibria needs a one-player game");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    best = std::max(best, game.payoff_at(k)[0]);
  }
  EquilibriumSet out;
  out.tolerance = tol;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (game.payoff_at(k)[0] >= best - tol) {
      out.equilibria.push_back(point_mass(game, game.profile_at(k)));
    }
  }
  return out;
}

EquilibriumSet solve_equilibria(const Game& game, double tol,
                                std::size_t support_budget) {
  if (game.num_players() == 1) return single_player_equilibria(game, tol);
  try {
    return bimatrix_equilibria(game, tol, support_budget);
  } catch (const SizeLimit& limit) {
    EquilibriumSet out;
    out.tolerance = tol;
    out.exhaustive = false;
    for (const auto& s : pure_equilibria(game, tol)) {
      out.equilibria.push_back(point_mass(game, s));
    }
    out.notes.push_back(std::string(limit.what()) +
                        "; listing pure equilibria only");
    return out;
  }
}

double pure_maxmin(const Game& game, std::size_t player) {
  require_valid(game);
  std::vector<double> worst(game.num_strategies(player),
                            std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    worst[s[player]] = std::min(worst[s[player]], game.payoff_at(k)[player]);
  }
  return *std::max_element(worst.begin(), worst.end());
}

}  // namespace coopeq
