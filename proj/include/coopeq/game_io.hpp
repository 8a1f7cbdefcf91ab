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

#ifndef COOPEQ_GAME_IO_HPP_
#define COOPEQ_GAME_IO_HPP_

#include <string>

#include "json.hpp"

#include "coopeq/game.hpp"

namespace coopeq {

// Reads {"players": [...], "strategies": [[...], ...], "payoffs": nested}.
// `payoffs` nests one array level per player in player order and ends in a
// payoff vector. Null or absent entries load as missing payoffs so that
// validate() can report them. Throws ParseError on structural problems.
Game game_from_json(const nlohmann::json& doc);
Game parse_game(const std::string& text);
Game load_game(const std::string& path);

nlohmann::json game_to_json(const Game& game);
void save_game(const Game& game, const std::string& path);

}  // namespace coopeq

#endif  // COOPEQ_GAME_IO_HPP_
