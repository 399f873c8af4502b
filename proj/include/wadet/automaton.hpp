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

#ifndef WADET_AUTOMATON_HPP_
#define WADET_AUTOMATON_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wadet/errors.hpp"
#include "wadet/weight.hpp"

namespace wadet {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;
using Word = std::vector<SymbolId>;

struct Transition {
  StateId src = 0;
  SymbolId symbol = 0;
  Weight weight = 0;
  StateId dst = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Canonical order on transitions: (src, symbol, dst, weight).
bool transition_less(const Transition& a, const Transition& b);

/// Max-plus weighted automaton over a finite alphabet. Immutable once built.
///
/// States and symbols are dense indices; names live in side tables.
/// Transitions are kept sorted by (src, symbol, dst, weight). Parallel
/// transitions with distinct weights are allowed (the subset construction
/// produces them); exact duplicates are merged.
class WeightedAutomaton {
 public:
  WeightedAutomaton(std::vector<std::string> alphabet,
                    std::vector<std::string> states,
                    std::vector<StateId> initial,
                    std::vector<StateId> final_states,
                    std::vector<Transition> transitions);

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_symbols() const { return alphabet_.size(); }
  std::size_t num_transitions() const { return transitions_.size(); }

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& state_names() const { return states_; }
  const std::string& state_name(StateId q) const { return states_.at(q); }
  const std::string& symbol_name(SymbolId a) const { return alphabet_.at(a); }

  const std::vector<StateId>& initial() const { return initial_; }
  const std::vector<StateId>& final_states() const { return final_; }
  bool is_initial(StateId q) const { return is_initial_[q]; }
  bool is_final(StateId q) const { return is_final_[q]; }

  std::span<const Transition> transitions() const { return transitions_; }
  std::span<const Transition> out(StateId q) const;
  std::span<const Transition> out(StateId q, SymbolId a) const;
  // Largest weight among transitions p -a-> q. Runs given as state sequences
  // are valued with this weight.
  std::optional<Weight> weight(StateId p, SymbolId a, StateId q) const;

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;

  friend bool operator==(const WeightedAutomaton& a,
                         const WeightedAutomaton& b);

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::vector<StateId> initial_;
  std::vector<StateId> final_;
  std::vector<bool> is_initial_;
  std::vector<bool> is_final_;
  std::vector<Transition> transitions_;
  // offsets_[q * |A| + a] .. offsets_[q * |A| + a + 1]
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, SymbolId> symbol_index_;
};

/// Incremental construction helper. Duplicate (src, symbol, dst) triples with
/// equal weights are merged; differing weights are rejected at build().
class AutomatonBuilder {
 public:
  explicit AutomatonBuilder(std::vector<std::string> alphabet);

  StateId add_state(std::string name, bool initial = false, bool final = false);
  StateId state(std::string_view name) const;
  SymbolId symbol(std::string_view name) const;
  void set_initial(StateId q, bool value = true);
  void set_final(StateId q, bool value = true);
  void add_transition(StateId src, SymbolId a, Weight w, StateId dst);
  void add_transition(std::string_view src, std::string_view a, Weight w,
                      std::string_view dst);
  std::size_t num_states() const { return names_.size(); }

  WeightedAutomaton build() const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> names_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
  std::vector<Transition> transitions_;
  std::unordered_map<std::string, StateId> index_;
};

// Symbols are comma-separated unless every symbol is a single character and
// the text has no comma, in which case each character is one symbol.
Word parse_word(const WeightedAutomaton& n, std::string_view text);
Word parse_word(const std::vector<std::string>& alphabet, std::string_view text);
std::string format_word(const std::vector<std::string>& alphabet, const Word& w);

// All words over an alphabet of the given size with length <= max_len, in
// length-lexicographic order.
std::vector<Word> all_words(std::size_t num_symbols, std::size_t max_len);

}  // namespace wadet

#endif  // WADET_AUTOMATON_HPP_
