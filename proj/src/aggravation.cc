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

#include "coopeq/aggravation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "coopeq/errors.hpp"

namespace coopeq {
namespace {

std::string format_number(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string format_pair(double x, double y) {
  return "(" + format_number(x) + ", " + format_number(y) + ")";
}

}  // namespace

double AggravationFunction::operator()(double x, double y) const {
  if (x < y - kStrictnessMargin) {
    throw DomainError(descriptor_ + " evaluated at " + format_pair(x, y) +
                      " with x < y");
  }
  if (x <= y) return 0.0;
  return evaluator_(x, y);
}

AggravationFunction linear() {
  return AggravationFunction([](double x, double y) { return x - y; },
                             "linear");
}

AggravationFunction utility_difference(std::function<double(double)> u,
                                       std::string name, double lo,
                                       double hi) {
  double previous = u(lo);
  for (int k = 1; k <= 10; ++k) {
    const double t = lo + (hi - lo) * k / 10.0;
    const double current = u(t);
    if (!(current > previous + kStrictnessMargin)) {
      throw AxiomViolation("utility '" + name +
                           "' is not strictly increasing near " +
                           format_number(t));
    }
    previous = current;
  }
  return AggravationFunction(
      [u = std::move(u)](double x, double y) { return u(x) - u(y); },
      "utility_difference(" + name + ")");
}

AggravationFunction scaled_linear(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("scaled_linear needs c > 0, got " + format_number(c));
  }
  return AggravationFunction([c](double x, double y) { return c * (x - y); },
                             "scaled:" + format_number(c));
}

AggravationFunction sqrt_utility() {
  return utility_difference([](double v) { return std::sqrt(v); }, "sqrt");
}

AggravationFunction parse_aggravation(const std::string& spec) {
  if (spec == "linear") return linear();
  if (spec == "sqrt") return sqrt_utility();
  const std::string prefix = "scaled:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string number = spec.substr(prefix.size());
    char* end = nullptr;
    const double c = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size()) {
      throw InvalidParameters("cannot parse scale in '" + spec + "'");
    }
    try {
      return scaled_linear(c);
    } catch (const DomainError& e) {
      throw InvalidParameters(e.what());
    }
  }
  throw InvalidParameters("unknown aggravation '" + spec +
                          "' (expected linear, sqrt or scaled:<c>)");
}

std::vector<std::pair<double, double>> default_axiom_grid(double lo,
                                                          double hi) {
  std::vector<std::pair<double, double>> grid;
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= a; ++b) {
      grid.emplace_back(lo + (hi - lo) * a / 10.0, lo + (hi - lo) * b / 10.0);
    }
  }
  return grid;
}

std::vector<std::string> validate_axioms(
    const AggravationFunction& agg,
    const std::vector<std::pair<double, double>>& grid, double margin) {
  std::vector<std::string> issues;
  const auto name = agg.descriptor();
  std::map<double, std::vector<std::pair<double, double>>> by_y;  // x -> value
  std::map<double, std::vector<std::pair<double, double>>> by_x;  // y -> value
  for (const auto& [x, y] : grid) {
    if (x < y) {
      issues.push_back("grid pair " + format_pair(x, y) + " has x < y");
      continue;
    }
    const double v = agg.raw(x, y);
    if (!std::isfinite(v)) {
      issues.push_back(name + " is not finite at " + format_pair(x, y));
      continue;
    }
    if (v < -margin) {
      issues.push_back(name + " is negative at " + format_pair(x, y));
    }
    if (x == y && std::abs(v) > margin) {
      issues.push_back(name + " is nonzero on the diagonal at " +
                       format_pair(x, y));
    }
    if (x > y && std::abs(v) <= margin) {
      issues.push_back(name + " vanishes off the diagonal at " +
                       format_pair(x, y));
    }
    by_y[y].emplace_back(x, v);
    by_x[x].emplace_back(y, v);
  }
  for (auto& [y, row] : by_y) {
    std::sort(row.begin(), row.end());
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (!(row[k].second > row[k - 1].second + margin)) {
        issues.push_back(name + " is not strictly increasing in x between " +
                         format_pair(row[k - 1].first, y) + " and " +
                         format_pair(row[k].first, y));
      }
    }
  }
  for (auto& [x, column] : by_x) {
    std::sort(column.begin(), column.end());
    for (std::size_t k = 1; k < column.size(); ++k) {
      if (!(column[k].second < column[k - 1].second - margin)) {
        issues.push_back(name + " is not strictly decreasing in y between " +
                         format_pair(x, column[k - 1].first) + " and " +
                         format_pair(x, column[k].first));
      }
    }
  }
  return issues;
}

}  // namespace coopeq
