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

#include "coopeq/game_io.hpp"

#include <fstream>
#include <sstream>

#include "coopeq/errors.hpp"

namespace coopeq {

using nlohmann::json;

namespace {

std::vector<std::string> string_array(const json& node, const std::string& what) {
  if (!node.is_array()) throw ParseError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) {
      throw ParseError(what + " must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<double> payoff_entry(const json* node, const Game& shape,
                                 const PureProfile& profile) {
  if (node == nullptr || node->is_null()) return {};
  if (!node->is_array()) {
    throw ParseError("payoff for profile " + shape.describe(profile) +
                     " must be an array of numbers");
  }
  std::vector<double> out;
  for (const auto& v : *node) {
    if (!v.is_number()) {
      throw ParseError("payoff for profile " + shape.describe(profile) +
                       " must be an array of numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

void check_extent(const json& node, std::size_t depth, const Game& shape) {
  if (node.is_null()) return;
  if (depth == shape.num_players()) return;
  if (!node.is_array()) {
    throw ParseError("payoffs must nest one array per player");
  }
  if (node.size() > shape.num_strategies(depth)) {
    throw ParseError("payoffs list " + std::to_string(node.size()) +
                     " entries for player " + shape.players()[depth] +
                     ", who has " +
                     std::to_string(shape.num_strategies(depth)) +
                     " strategies");
  }
  for (const auto& child : node) check_extent(child, depth + 1, shape);
}

}  // namespace

Game game_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("game document must be an object");
  for (const char* key : {"players", "strategies", "payoffs"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("game document lacks \"") + key + "\"");
    }
  }
  auto players = string_array(doc["players"], "players");
  const json& strategies_node = doc["strategies"];
  if (!strategies_node.is_array()) {
    throw ParseError("strategies must be an array of arrays");
  }
  std::vector<std::vector<std::string>> strategies;
  for (const auto& s : strategies_node) {
    strategies.push_back(string_array(s, "strategies entries"));
  }
  if (strategies.size() != players.size()) {
    throw ParseError("strategies must list one array per player");
  }
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (strategies[i].empty()) {
      throw ParseError("player " + players[i] + " has no strategies");
    }
  }
  if (players.empty()) throw ParseError("game needs at least one player");

  // Shape only, for profile enumeration and labels.
  const Game shape(players, strategies, {});
  const json& payoffs = doc["payoffs"];
  check_extent(payoffs, 0, shape);
  std::vector<std::vector<double>> table(shape.num_profiles());
  for (std::size_t k = 0; k < shape.num_profiles(); ++k) {
    const PureProfile s = shape.profile_at(k);
    const json* node = &payoffs;
    for (std::size_t i = 0; i < s.size() && node != nullptr; ++i) {
      if (!node->is_array() || s[i] >= node->size()) {
        node = nullptr;
      } else {
        node = &(*node)[s[i]];
      }
    }
    table[k] = payoff_entry(node, shape, s);
  }
  return Game(std::move(players), std::move(strategies), std::move(table));
}

Game parse_game(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return game_from_json(doc);
}

Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

json game_to_json(const Game& game) {
  json out;
  out["players"] = game.players();
  out["strategies"] = game.all_strategies();
  // Built back to front: the last player's index varies fastest.
  std::vector<json> level;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    level.emplace_back(game.payoff_at(k));
  }
  for (std::size_t i = game.num_players(); i-- > 0;) {
    const std::size_t width = game.num_strategies(i);
    std::vector<json> next;
    for (std::size_t start = 0; start < level.size(); start += width) {
      json group = json::array();
      for (std::size_t k = start; k < start + width; ++k) {
        group.push_back(std::move(level[k]));
      }
      next.push_back(std::move(group));
    }
    level = std::move(next);
  }
  out["payoffs"] = level.front();
  return out;
}

void save_game(const Game& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << game_to_json(game).dump(2) << '\n';
}

}  // namespace coopeq
