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

#include "wadet/mealy.hpp"

#include <algorithm>

namespace wadet {

MealyMachine::MealyMachine(std::size_t num_memory, std::size_t num_symbols,
                           MemoryId initial_memory, StateId initial_output,
                           std::vector<MemoryId> update,
                           std::vector<StateId> output)
    : num_memory_(num_memory),
      num_symbols_(num_symbols),
      initial_memory_(initial_memory),
      initial_output_(initial_output),
      update_(std::move(update)),
      output_(std::move(output)) {
  if (num_memory_ == 0) throw InputError("Mealy machine without memory states");
  if (initial_memory_ >= num_memory_) throw InputError("initial memory out of range");
  if (update_.size() != num_memory_ * num_symbols_ ||
      output_.size() != num_memory_ * num_symbols_) {
    throw InputError("Mealy tables are not total");
  }
  if (std::any_of(update_.begin(), update_.end(),
                  [&](MemoryId s) { return s >= num_memory_; })) {
    throw InputError("Mealy update leaves the memory set");
  }
}

std::vector<StateId> strategy_states(const MealyMachine& m, const Word& w) {
  std::vector<StateId> out{m.initial_output()};
  MemoryId s = m.initial_memory();
  for (SymbolId a : w) {
    out.push_back(m.output(s, a));
    s = m.update(s, a);
  }
  return out;
}

}  // namespace wadet
