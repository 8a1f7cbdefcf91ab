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

#include "coopeq/cooperative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Dense>

#include "coopeq/errors.hpp"

namespace coopeq {

namespace {

void require_two_players(const Game& game, const char* what) {
  if (game.num_players() != 2) {
    throw InvalidParameters(std::string(what) +
                            " requires a two-player game");
  }
}

void require_aggs(const Game& game, const AggravationProfile& aggs) {
  if (aggs.size() != game.num_players()) {
    throw InvalidParameters("expected one aggravation function per player");
  }
}

MixedProfile replace(const Game& game, MixedProfile profile,
                     std::size_t player, std::size_t strategy) {
  profile[player].assign(game.num_strategies(player), 0.0);
  profile[player][strategy] = 1.0;
  return profile;
}

// Advances `c` to the next k-subset of {0, ..., n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

PartitionValues evaluate_partition(
    const Game& game, const CoalitionStructure& partition,
    const AggravationProfile& aggs,
    const std::optional<std::vector<double>>& tau_deviate, double tol) {
  require_two_players(game, "structure value");
  require_aggs(game, aggs);
  partition.check_partition_of(game.num_players());
  if (tau_deviate) {
    if (tau_deviate->size() != game.num_players()) {
      throw InvalidParameters("expected one deviation probability per player");
    }
    for (double t : *tau_deviate) {
      if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidParameters("deviation probability outside [0, 1]");
      }
    }
  }

  const GeneratedGame generated = generate_game(game, partition, aggs, tol);
  PartitionValues out;
  out.partition = partition;
  out.equilibria = structure_equilibria(generated, tol);
  const auto& eqs = out.equilibria.equilibria;
  if (eqs.empty()) {
    throw SolverFailure("no equilibrium found for structure " +
                        partition.describe());
  }

  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t opp = 1 - i;
    StructureValue value;
    value.e_stay = std::numeric_limits<double>::infinity();
    value.e_dev = std::numeric_limits<double>::infinity();
    bool any_deviation = false;
    for (const auto& sigma : eqs) {
      value.e_stay = std::min(value.e_stay, expected_payoff(game, sigma, i));
      const double current = expected_payoff(game, sigma, opp);
      const auto options = pure_strategy_payoffs(game, opp, sigma);
      for (std::size_t s = 0; s < options.size(); ++s) {
        if (options[s] > current + tol) {
          any_deviation = true;
          value.e_dev = std::min(
              value.e_dev,
              expected_payoff(game, replace(game, sigma, opp, s), i));
        }
      }
    }
    if (!any_deviation) value.e_dev = value.e_stay;

    if (!out.equilibria.exhaustive) {
      // Only pure equilibria are listed. The minimum is still exact when it
      // meets the pure maxmin bound that every equilibrium respects.
      std::size_t block = partition.num_blocks();
      for (std::size_t b = 0; b < partition.num_blocks(); ++b) {
        const Block& members = partition.blocks()[b];
        if (members.size() == 1 && members[0] == i) block = b;
      }
      if (block == partition.num_blocks()) {
        throw SolverFailure("cannot certify equilibrium payoffs for " +
                            partition.describe());
      }
      const double bound = pure_maxmin(generated.game, block);
      if (std::abs(value.e_stay - bound) > tol) {
        throw SolverFailure(
            "minimum equilibrium payoff not certified for player " +
            game.players()[i] + " under " + partition.describe());
      }
      out.equilibria.notes.push_back(
          "minimum payoff of " + game.players()[i] +
          " certified by the pure maxmin bound");
    }

    if (tau_deviate) {
      value.tau.deviate = (*tau_deviate)[i];
      value.tau.stay = 1.0 - value.tau.deviate;
      value.tau.source = TauSource::kUserSupplied;
    } else {
      value.tau = deviation_parameters(
          incentive(game, out.equilibria, opp, aggs, tol),
          loss(game, out.equilibria, opp, aggs, tol));
    }
    value.value =
        value.e_stay * value.tau.stay + value.e_dev * value.tau.deviate;
    out.players.push_back(value);
  }
  return out;
}

}  // namespace

DeviationParameters deviation_parameters(double incentive, double loss) {
  if (incentive < 0.0 || loss < 0.0 || !std::isfinite(incentive) ||
      !std::isfinite(loss)) {
    throw DomainError("incentive and loss must be finite and nonnegative");
  }
  DeviationParameters out;
  out.incentive = incentive;
  out.loss = loss;
  out.deviate = incentive > 0.0 ? incentive / (incentive + loss) : 0.0;
  out.stay = 1.0 - out.deviate;
  return out;
}

EquilibriumSet structure_equilibria(const GeneratedGame& generated,
                                    double tol) {
  EquilibriumSet meta = solve_equilibria(generated.game, tol);
  EquilibriumSet out;
  out.tolerance = meta.tolerance;
  out.exhaustive = meta.exhaustive;
  out.notes = std::move(meta.notes);
  for (const auto& sigma : meta.equilibria) {
    out.equilibria.push_back(generated.to_base(sigma));
  }
  return out;
}

double incentive(const Game& game, const EquilibriumSet& equilibria,
                 std::size_t deviator, const AggravationProfile& aggs,
                 double tol) {
  require_aggs(game, aggs);
  double out = 0.0;
  for (const auto& sigma : equilibria.equilibria) {
    const double current = expected_payoff(game, sigma, deviator);
    const double best = best_response_value(game, deviator, sigma);
    if (best > current + tol) {
      out = std::max(out, aggs[deviator](best, current));
    }
  }
  return out;
}

double loss(const Game& game, const EquilibriumSet& equilibria,
            std::size_t deviator, const AggravationProfile& aggs, double tol) {
  require_two_players(game, "loss");
  require_aggs(game, aggs);
  const std::size_t other = 1 - deviator;
  double out = 0.0;
  for (const auto& sigma : equilibria.equilibria) {
    const double eq_dev = expected_payoff(game, sigma, deviator);
    const double eq_other = expected_payoff(game, sigma, other);
    const auto options = pure_strategy_payoffs(game, deviator, sigma);
    const double best = *std::max_element(options.begin(), options.end());
    const auto against_eq = pure_strategy_payoffs(game, other, sigma);
    for (std::size_t d = 0; d < options.size(); ++d) {
      if (options[d] < best - tol) continue;
      const MixedProfile deviated = replace(game, sigma, deviator, d);
      const double stay_value = expected_payoff(game, deviated, other);
      const auto against_dev = pure_strategy_payoffs(game, other, deviated);
      for (std::size_t s = 0; s < against_dev.size(); ++s) {
        const bool profits = against_eq[s] > eq_other + tol;
        const bool answers = against_dev[s] >= stay_value - tol;
        if (!profits && !answers) continue;
        const double outcome =
            expected_payoff(game, replace(game, deviated, other, s), deviator);
        if (eq_dev > outcome + tol) {
          out = std::max(out, aggs[deviator](eq_dev, outcome));
        }
      }
    }
  }
  return out;
}

double incentive(const Game& game, const CoalitionStructure& partition,
                 std::size_t deviator, const AggravationProfile& aggs,
                 double tol) {
  const auto generated = generate_game(game, partition, aggs, tol);
  return incentive(game, structure_equilibria(generated, tol), deviator, aggs,
                   tol);
}

double loss(const Game& game, const CoalitionStructure& partition,
            std::size_t deviator, const AggravationProfile& aggs, double tol) {
  const auto generated = generate_game(game, partition, aggs, tol);
  return loss(game, structure_equilibria(generated, tol), deviator, aggs, tol);
}

DeviationParameters tau(const Game& game, const CoalitionStructure& partition,
                        std::size_t player, const AggravationProfile& aggs,
                        double tol) {
  require_two_players(game, "tau");
  if (player >= 2) throw InvalidParameters("player index out of range");
  const auto generated = generate_game(game, partition, aggs, tol);
  const auto eqs = structure_equilibria(generated, tol);
  const std::size_t opp = 1 - player;
  return deviation_parameters(incentive(game, eqs, opp, aggs, tol),
                              loss(game, eqs, opp, aggs, tol));
}

std::vector<StructureValue> structure_value(
    const Game& game, const CoalitionStructure& partition,
    const AggravationProfile& aggs,
    const std::optional<std::vector<double>>& tau_deviate, double tol) {
  return evaluate_partition(game, partition, aggs, tau_deviate, tol).players;
}

double n_player_value(std::size_t num_players, std::size_t player,
                      const std::vector<DeviationScenario>& scenarios) {
  if (player >= num_players) {
    throw InvalidParameters("player index out of range");
  }
  std::vector<Block> seen;
  double total_probability = 0.0;
  double value = 0.0;
  for (const auto& scenario : scenarios) {
    Block deviators = scenario.deviators;
    std::sort(deviators.begin(), deviators.end());
    if (std::adjacent_find(deviators.begin(), deviators.end()) !=
        deviators.end()) {
      throw InvalidParameters("deviator set repeats a player");
    }
    for (std::size_t d : deviators) {
      if (d >= num_players || d == player) {
        throw InvalidParameters("deviator set must avoid the evaluated player");
      }
    }
    if (std::find(seen.begin(), seen.end(), deviators) != seen.end()) {
      throw InvalidParameters("deviator set listed twice");
    }
    seen.push_back(deviators);
    if (!(scenario.probability >= 0.0 && scenario.probability <= 1.0)) {
      throw InvalidParameters("scenario probability outside [0, 1]");
    }
    total_probability += scenario.probability;
    value += scenario.probability * scenario.min_payoff;
  }
  if (std::abs(total_probability - 1.0) > 1e-9) {
    throw InvalidParameters("scenario probabilities must sum to 1");
  }
  return value;
}

std::vector<PartitionValues> analyze_partitions(
    const Game& game, const AggravationProfile& aggs, double tol,
    const std::optional<std::vector<double>>& tau_deviate) {
  require_valid(game);
  require_two_players(game, "partition analysis");
  std::vector<PartitionValues> out;
  for (const auto& partition : enumerate_partitions(game.num_players())) {
    out.push_back(evaluate_partition(game, partition, aggs, tau_deviate, tol));
  }
  return out;
}

std::optional<ParetoSolution> pareto_solvable(
    const std::vector<PartitionValues>& analysis, double tol) {
  std::optional<std::size_t> chosen;
  for (std::size_t p = 0; p < analysis.size(); ++p) {
    bool dominant = true;
    for (std::size_t q = 0; q < analysis.size() && dominant; ++q) {
      for (std::size_t i = 0; i < analysis[p].players.size(); ++i) {
        if (analysis[p].players[i].value <
            analysis[q].players[i].value - tol) {
          dominant = false;
          break;
        }
      }
    }
    if (!dominant) continue;
    if (!chosen || analysis[p].partition.is_grand()) chosen = p;
  }
  if (!chosen) return std::nullopt;
  ParetoSolution out;
  out.p_star = analysis[*chosen].partition;
  for (const auto& v : analysis[*chosen].players) out.values.push_back(v.value);
  return out;
}

std::optional<ParetoSolution> pareto_solvable(const Game& game,
                                              const AggravationProfile& aggs,
                                              double tol) {
  return pareto_solvable(analyze_partitions(game, aggs, tol), tol);
}

InducedGame::InducedGame(Game base, std::vector<double> floor, double tol)
    : base_(std::move(base)), floor_(std::move(floor)), tol_(tol) {
  if (floor_.size() != base_.num_players()) {
    throw InvalidParameters("floor needs one value per player");
  }
}

bool InducedGame::feasible(const PureProfile& profile) const {
  const auto& u = base_.payoff(profile);
  for (std::size_t i = 0; i < floor_.size(); ++i) {
    if (u[i] < floor_[i] - tol_) return false;
  }
  return true;
}

bool InducedGame::feasible(const MixedProfile& profile) const {
  const auto u = expected_payoff(base_, profile);
  for (std::size_t i = 0; i < floor_.size(); ++i) {
    if (u[i] < floor_[i] - tol_) return false;
  }
  return true;
}

std::vector<PureProfile> InducedGame::feasible_pure_profiles() const {
  std::vector<PureProfile> out;
  for (std::size_t k = 0; k < base_.num_profiles(); ++k) {
    PureProfile s = base_.profile_at(k);
    if (feasible(s)) out.push_back(std::move(s));
  }
  return out;
}

Game InducedGame::restricted_game() const {
  const std::size_t n = base_.num_players();
  std::vector<std::vector<bool>> used(n);
  for (std::size_t i = 0; i < n; ++i) {
    used[i].assign(base_.num_strategies(i), false);
  }
  for (const auto& s : feasible_pure_profiles()) {
    for (std::size_t i = 0; i < n; ++i) used[i][s[i]] = true;
  }
  std::vector<std::vector<std::size_t>> keep(n);
  std::vector<std::vector<std::string>> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < used[i].size(); ++s) {
      if (!used[i][s]) continue;
      keep[i].push_back(s);
      labels[i].push_back(base_.strategies(i)[s]);
    }
    if (keep[i].empty()) {
      throw NotInducible("no feasible strategy for player " +
                         base_.players()[i]);
    }
  }
  return Game::FromFunction(base_.players(), labels,
                            [&](const PureProfile& s) {
                              PureProfile full(n);
                              for (std::size_t i = 0; i < n; ++i) {
                                full[i] = keep[i][s[i]];
                              }
                              return base_.payoff(full);
                            });
}

InducedGame induced_game(const Game& game, const std::vector<double>& floor,
                         const std::vector<MixedProfile>& witnesses,
                         double tol) {
  require_valid(game);
  InducedGame out(game, floor, tol);
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (out.feasible(game.profile_at(k))) return out;
  }
  for (const auto& w : witnesses) {
    if (out.feasible(w)) return out;
  }
  throw NotInducible("no profile meets the payoff floor");
}

double best_feasible_payoff(const InducedGame& induced,
                            const MixedProfile& profile, std::size_t player) {
  const Game& game = induced.base();
  const std::size_t n = game.num_players();
  const std::size_t m = game.num_strategies(player);
  const double tol = induced.tolerance();

  // a[j][s]: payoff of player j when `player` plays s.
  std::vector<std::vector<double>> a(n, std::vector<double>(m));
  for (std::size_t s = 0; s < m; ++s) {
    const auto u = expected_payoff(game, replace(game, profile, player, s));
    for (std::size_t j = 0; j < n; ++j) a[j][s] = u[j];
  }
  const auto& floor = induced.floor();
  auto admissible = [&](const std::vector<double>& x) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = 0.0;
      for (std::size_t s = 0; s < m; ++s) v += a[j][s] * x[s];
      if (v < floor[j] - tol) return false;
    }
    return true;
  };
  auto value_of = [&](const std::vector<double>& x) {
    double v = 0.0;
    for (std::size_t s = 0; s < m; ++s) v += a[player][s] * x[s];
    return v;
  };

  double best = -std::numeric_limits<double>::infinity();
  if (induced.feasible(profile)) {
    best = expected_payoff(game, profile, player);
  }
  // Vertices of {x in simplex : a_j x >= floor_j}: a support of size k with
  // k - 1 tight floor constraints.
  const std::size_t max_support = std::min(m, n + 1);
  for (std::size_t k = 1; k <= max_support; ++k) {
    auto support = first_combination(k);
    do {
      auto active = first_combination(k - 1);
      do {
        Eigen::MatrixXd lhs(k, k);
        Eigen::VectorXd rhs(k);
        for (std::size_t c = 0; c < k; ++c) lhs(0, c) = 1.0;
        rhs(0) = 1.0;
        for (std::size_t r = 0; r + 1 < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) {
            lhs(r + 1, c) = a[active[r]][support[c]];
          }
          rhs(r + 1) = floor[active[r]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(lhs);
        lu.setThreshold(1e-12);
        if (lu.rank() < static_cast<Eigen::Index>(k)) continue;
        const Eigen::VectorXd sol = lu.solve(rhs);
        std::vector<double> x(m, 0.0);
        bool ok = true;
        for (std::size_t c = 0; c < k; ++c) {
          if (sol(c) < -1e-12) {
            ok = false;
            break;
          }
          x[support[c]] = std::max(0.0, sol(c));
        }
        if (ok && admissible(x)) best = std::max(best, value_of(x));
      } while (k > 1 && next_combination(active, n));
    } while (next_combination(support, m));
  }
  return best;
}

std::vector<CooperativeEquilibrium> induced_pure_equilibria(
    const InducedGame& induced) {
  const Game& game = induced.base();
  const double tol = induced.tolerance();
  const double certificate_tol = std::max(tol, kDefaultTolerance);
  std::vector<bool> feasible(game.num_profiles());
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    feasible[k] = induced.feasible(game.profile_at(k));
  }
  std::vector<CooperativeEquilibrium> out;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    if (!feasible[k]) continue;
    const PureProfile s = game.profile_at(k);
    const auto& u = game.payoff_at(k);
    bool stable = true;
    for (std::size_t i = 0; i < game.num_players() && stable; ++i) {
      PureProfile t = s;
      for (std::size_t alt = 0; alt < game.num_strategies(i); ++alt) {
        t[i] = alt;
        const std::size_t idx = game.index_of(t);
        if (feasible[idx] && game.payoff_at(idx)[i] > u[i] + tol) {
          stable = false;
          break;
        }
      }
    }
    if (!stable) continue;
    CooperativeEquilibrium eq;
    eq.profile = point_mass(game, s);
    eq.pure = s;
    eq.payoffs = u;
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      eq.max_mixed_gain = std::max(
          eq.max_mixed_gain, best_feasible_payoff(induced, eq.profile, i) - u[i]);
    }
    eq.mixed_certified = eq.max_mixed_gain <= certificate_tol;
    out.push_back(std::move(eq));
  }
  return out;
}

namespace {

inline constexpr std::size_t kMaxGridProfiles = 1000000;

// Point masses and two-strategy mixtures in steps of 0.1.
std::vector<Distribution> grid_distributions(std::size_t m) {
  std::vector<Distribution> out;
  for (std::size_t s = 0; s < m; ++s) {
    Distribution d(m, 0.0);
    d[s] = 1.0;
    out.push_back(std::move(d));
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m; ++t) {
      for (int w = 1; w < 10; ++w) {
        Distribution d(m, 0.0);
        d[s] = w / 10.0;
        d[t] = 1.0 - w / 10.0;
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

std::optional<CooperativeEquilibrium> grid_epsilon_equilibrium(
    const InducedGame& induced, double& epsilon) {
  const Game& game = induced.base();
  const std::size_t n = game.num_players();
  std::vector<std::vector<Distribution>> grids(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    grids[i] = grid_distributions(game.num_strategies(i));
    total *= grids[i].size();
    if (total > kMaxGridProfiles) {
      throw SolverFailure("epsilon-equilibrium grid too large");
    }
  }
  std::optional<CooperativeEquilibrium> best;
  epsilon = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    MixedProfile sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = grids[i][pick[i]];
    if (induced.feasible(sigma)) {
      const auto u = expected_payoff(game, sigma);
      double gain = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        gain = std::max(gain, best_feasible_payoff(induced, sigma, i) - u[i]);
      }
      if (gain < epsilon) {
        epsilon = gain;
        CooperativeEquilibrium eq;
        eq.profile = sigma;
        eq.payoffs = u;
        eq.max_mixed_gain = gain;
        eq.mixed_certified = false;
        best = std::move(eq);
      }
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++pick[i] < grids[i].size()) break;
      pick[i] = 0;
    }
  }
  return best;
}

}  // namespace

CooperativeResult cooperative_equilibria(const Game& game,
                                         const AggravationProfile& aggs,
                                         double tol) {
  CooperativeResult out;
  out.partitions = analyze_partitions(game, aggs, tol);
  const auto solution = pareto_solvable(out.partitions, tol);
  if (!solution) {
    throw NotParetoSolvable("no coalition structure maximises every value");
  }
  out.p_star = solution->p_star;
  out.floor = solution->values;
  std::vector<MixedProfile> witnesses;
  for (const auto& pv : out.partitions) {
    if (pv.partition == out.p_star) witnesses = pv.equilibria.equilibria;
  }
  const InducedGame induced = induced_game(game, out.floor, witnesses, tol);
  out.equilibria = induced_pure_equilibria(induced);
  if (out.equilibria.empty()) {
    double epsilon = 0.0;
    auto approx = grid_epsilon_equilibrium(induced, epsilon);
    if (!approx) {
      throw SolverFailure("no feasible profile on the epsilon grid");
    }
    out.approximate = true;
    out.epsilon = epsilon;
    out.equilibria.push_back(std::move(*approx));
  }
  return out;
}

}  // namespace coopeq
