// Copyright 2026 The GibbsGame Authors
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

// Versioned JSON file formats.
//
// Every file is an object with "format_version" (currently 1) and "kind":
//
//   graphical        n, actions, edges, payoffs[{player, scope, table}]
//                    where scope is the closed neighborhood of player
//   hypergraphical   n, actions, hyperedges, payoffs[{player, scope, table}]
//                    with one entry per (hyperedge, member); scope is the
//                    hyperedge
//   gibbs_potential  n, actions, edges, constant, cliques[{scope, table}]
//   playing_scheme   n, actions, edges, conditionals[{player, scope, table}]
//                    where scope is the open neighborhood and the table is
//                    row-major (neighbor configuration, own action)
//
// Tables are flattened row-major in mixed radix over the scope, smallest
// player index most significant. Numbers are written in shortest
// round-trip form, so parse followed by serialize reproduces the file.

#ifndef GIBBSGAME_IO_HPP_
#define GIBBSGAME_IO_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "gibbsgame/dynamics.hpp"
#include "gibbsgame/game.hpp"
#include "gibbsgame/potential.hpp"

namespace gibbsgame {

inline constexpr int kFormatVersion = 1;

using AnyGame = std::variant<GraphicalGame, HypergraphicalGame>;

std::string serialize(const GraphicalGame& game);
std::string serialize(const HypergraphicalGame& game);
std::string serialize(const GibbsPotential& gp);
std::string serialize(const PlayingScheme& scheme);
// One joint action per line, space separated; the first line is x0.
std::string serialize_trace(const PlayTrace& trace);

// Value of the "kind" field. Throws ParseError on malformed input.
std::string file_kind(std::string_view text, std::string_view source = "input");

AnyGame parse_game(std::string_view text, std::string_view source = "input");
GibbsPotential parse_potential(std::string_view text,
                               std::string_view source = "input");
PlayingScheme parse_scheme(std::string_view text,
                           std::string_view source = "input");

// Flattens hypergraphical games.
GraphicalGame as_graphical(const AnyGame& game);

// Re-indents a JSON document in the layout used by all files: objects one
// member per line, arrays of scalars on a single line. Key order is kept.
std::string pretty_json(std::string_view json_text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace gibbsgame

#endif  // GIBBSGAME_IO_HPP_
