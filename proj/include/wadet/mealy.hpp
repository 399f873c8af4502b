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

#ifndef WADET_MEALY_HPP_
#define WADET_MEALY_HPP_

#include <cstdint>
#include <vector>

#include "wadet/automaton.hpp"

namespace wadet {

using MemoryId = std::uint32_t;

/// Finite-memory strategy for Eve in a regret game: after reading a word it
/// names the automaton state her run currently ends in.
///
/// update(s, a) is the next memory state, output(s, a) the state reached by
/// the transition chosen for symbol a. initial_output() is the state chosen
/// on the empty word. Both tables are total.
class MealyMachine {
 public:
  MealyMachine(std::size_t num_memory, std::size_t num_symbols,
               MemoryId initial_memory, StateId initial_output,
               std::vector<MemoryId> update, std::vector<StateId> output);

  std::size_t num_memory() const { return num_memory_; }
  std::size_t num_symbols() const { return num_symbols_; }
  MemoryId initial_memory() const { return initial_memory_; }
  StateId initial_output() const { return initial_output_; }
  MemoryId update(MemoryId s, SymbolId a) const {
    return update_[s * num_symbols_ + a];
  }
  StateId output(MemoryId s, SymbolId a) const {
    return output_[s * num_symbols_ + a];
  }

  friend bool operator==(const MealyMachine&, const MealyMachine&) = default;

 private:
  std::size_t num_memory_;
  std::size_t num_symbols_;
  MemoryId initial_memory_;
  StateId initial_output_;
  std::vector<MemoryId> update_;
  std::vector<StateId> output_;
};

// The sequence of states sigma(epsilon), sigma(a0), sigma(a0 a1), ...
std::vector<StateId> strategy_states(const MealyMachine& m, const Word& w);

}  // namespace wadet

#endif  // WADET_MEALY_HPP_
