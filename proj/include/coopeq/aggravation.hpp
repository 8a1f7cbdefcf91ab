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

#ifndef COOPEQ_AGGRAVATION_HPP_
#define COOPEQ_AGGRAVATION_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace coopeq {

// Disutility Agg(x, y) of renouncing a payoff x and receiving y <= x instead.
// Valid functions are nonnegative, vanish exactly on the diagonal, and are
// strictly increasing in x and strictly decreasing in y.
class AggravationFunction {
 public:
  using Evaluator = std::function<double(double, double)>;

  AggravationFunction(Evaluator evaluator, std::string descriptor)
      : evaluator_(std::move(evaluator)), descriptor_(std::move(descriptor)) {}

  // Throws DomainError when x < y - 1e-12. Returns exactly 0 when x <= y.
  double operator()(double x, double y) const;
  // Raw evaluator, no domain check. Used by the axiom checker.
  double raw(double x, double y) const { return evaluator_(x, y); }

  const std::string& descriptor() const { return descriptor_; }

 private:
  Evaluator evaluator_;
  std::string descriptor_;
};

inline double evaluate(const AggravationFunction& agg, double x, double y) {
  return agg(x, y);
}

// Agg(x, y) = x - y.
AggravationFunction linear();

// Agg(x, y) = u(x) - u(y). Throws AxiomViolation if u is not strictly
// increasing on the 11-point grid over [lo, hi].
AggravationFunction utility_difference(std::function<double(double)> u,
                                       std::string name = "utility",
                                       double lo = 0.0, double hi = 1.0);

// Agg(x, y) = c (x - y). Throws DomainError unless c > 0.
AggravationFunction scaled_linear(double c);

// u(x) = sqrt(x) through utility_difference.
AggravationFunction sqrt_utility();

// Parses "linear", "sqrt" or "scaled:<c>". Throws InvalidParameters.
AggravationFunction parse_aggravation(const std::string& spec);

inline constexpr double kStrictnessMargin = 1e-12;

// Pairs (x, y) with x, y on an 11-point grid over [lo, hi] and x >= y.
std::vector<std::pair<double, double>> default_axiom_grid(double lo = 0.0,
                                                          double hi = 1.0);

// Checks nonnegativity, zero-iff-diagonal and strict monotonicity on `grid`.
// Monotonicity is compared between grid pairs that share a coordinate.
std::vector<std::string> validate_axioms(
    const AggravationFunction& agg,
    const std::vector<std::pair<double, double>>& grid,
    double margin = kStrictnessMargin);

}  // namespace coopeq

#endif  // COOPEQ_AGGRAVATION_HPP_
