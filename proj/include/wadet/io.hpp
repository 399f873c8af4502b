// Copyright 2026 The wadet Authors
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

#ifndef WADET_IO_HPP_
#define WADET_IO_HPP_

// JSON documents for automata, arenas and Mealy machines. Output is canonical:
// sorted keys, two-space indent, trailing newline.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "wadet/automaton.hpp"
#include "wadet/egames.hpp"
#include "wadet/mealy.hpp"

namespace wadet::io {

inline constexpr std::string_view kAutomatonFormat = "wadet-automaton/1";
inline constexpr std::string_view kArenaFormat = "wadet-arena/1";
inline constexpr std::string_view kMealyFormat = "wadet-mealy/1";
inline constexpr std::string_view kReportFormat = "wadet-report/1";

// Two-space indent, sorted keys, arrays of scalars on one line.
std::string dump_json(const nlohmann::json& j);

std::string write_automaton(const WeightedAutomaton& a);
WeightedAutomaton read_automaton(std::string_view text);

// Vertex names must be unique in a file.
std::string write_arena(const EgrArena& g);
EgrArena read_arena(std::string_view text);

std::string write_mealy(const MealyMachine& m);
MealyMachine read_mealy(std::string_view text);

std::string load_file(const std::string& path);
void save_file(const std::string& path, const std::string& text);

// Graphviz rendering, not canonical.
std::string automaton_dot(const WeightedAutomaton& a);
std::string arena_dot(const EgrArena& g);

}  // namespace wadet::io

#endif  // WADET_IO_HPP_
