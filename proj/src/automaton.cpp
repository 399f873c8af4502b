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

#include "wadet/automaton.hpp"

#include <algorithm>
#include <tuple>

namespace wadet {

bool transition_less(const Transition& a, const Transition& b) {
  return std::tie(a.src, a.symbol, a.dst, a.weight) <
         std::tie(b.src, b.symbol, b.dst, b.weight);
}

namespace {

std::vector<StateId> normalize_set(std::vector<StateId> v, std::size_t n,
                                   const char* what) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!v.empty() && v.back() >= n) {
    throw InputError(std::string(what) + " references an undeclared state");
  }
  return v;
}

}  // namespace

WeightedAutomaton::WeightedAutomaton(std::vector<std::string> alphabet,
                                     std::vector<std::string> states,
                                     std::vector<StateId> initial,
                                     std::vector<StateId> final_states,
                                     std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)), states_(std::move(states)) {
  if (alphabet_.empty()) throw InputError("alphabet is empty");
  for (SymbolId a = 0; a < alphabet_.size(); ++a) {
    if (alphabet_[a].empty()) throw InputError("empty symbol name");
    if (!symbol_index_.emplace(alphabet_[a], a).second) {
      throw InputError("duplicate symbol '" + alphabet_[a] + "'");
    }
  }
  for (StateId q = 0; q < states_.size(); ++q) {
    if (!state_index_.emplace(states_[q], q).second) {
      throw InputError("duplicate state '" + states_[q] + "'");
    }
  }
  const std::size_t n = states_.size();
  initial_ = normalize_set(std::move(initial), n, "initial set");
  final_ = normalize_set(std::move(final_states), n, "final set");
  is_initial_.assign(n, false);
  is_final_.assign(n, false);
  for (StateId q : initial_) is_initial_[q] = true;
  for (StateId q : final_) is_final_[q] = true;

  for (const Transition& t : transitions) {
    if (t.src >= n || t.dst >= n) {
      throw InputError("transition references an undeclared state");
    }
    if (t.symbol >= alphabet_.size()) {
      throw InputError("transition references an undeclared symbol");
    }
  }
  std::sort(transitions.begin(), transitions.end(),
            [](const Transition& a, const Transition& b) {
              return std::tie(a.src, a.symbol, a.dst, a.weight) <
                     std::tie(b.src, b.symbol, b.dst, b.weight);
            });
  for (const Transition& t : transitions) {
    if (!transitions_.empty() && transitions_.back() == t) continue;
    transitions_.push_back(t);
  }

  const std::size_t k = alphabet_.size();
  offsets_.assign(n * k + 1, 0);
  for (const Transition& t : transitions_) ++offsets_[t.src * k + t.symbol + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

std::span<const Transition> WeightedAutomaton::out(StateId q) const {
  const std::size_t k = alphabet_.size();
  const std::size_t lo = offsets_[q * k];
  const std::size_t hi = offsets_[(q + 1) * k];
  return std::span<const Transition>(transitions_.data() + lo, hi - lo);
}

std::span<const Transition> WeightedAutomaton::out(StateId q,
                                                   SymbolId a) const {
  const std::size_t i = q * alphabet_.size() + a;
  return std::span<const Transition>(transitions_.data() + offsets_[i],
                                     offsets_[i + 1] - offsets_[i]);
}

std::optional<Weight> WeightedAutomaton::weight(StateId p, SymbolId a,
                                                StateId q) const {
  std::optional<Weight> best;
  for (const Transition& t : out(p, a)) {
    if (t.dst == q && (!best || *best < t.weight)) best = t.weight;
  }
  return best;
}

std::optional<StateId> WeightedAutomaton::find_state(
    std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> WeightedAutomaton::find_symbol(
    std::string_view name) const {
  auto it = symbol_index_.find(std::string(name));
  if (it == symbol_index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const WeightedAutomaton& a, const WeightedAutomaton& b) {
  return a.alphabet_ == b.alphabet_ && a.states_ == b.states_ &&
         a.initial_ == b.initial_ && a.final_ == b.final_ &&
         a.transitions_ == b.transitions_;
}

AutomatonBuilder::AutomatonBuilder(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)) {}

StateId AutomatonBuilder::add_state(std::string name, bool initial,
                                    bool final) {
  auto id = static_cast<StateId>(names_.size());
  if (!index_.emplace(name, id).second) {
    throw InputError("duplicate state '" + name + "'");
  }
  names_.push_back(std::move(name));
  initial_.push_back(initial);
  final_.push_back(final);
  return id;
}

StateId AutomatonBuilder::state(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("unknown state '" + std::string(name) + "'");
  return it->second;
}

SymbolId AutomatonBuilder::symbol(std::string_view name) const {
  for (SymbolId a = 0; a < alphabet_.size(); ++a) {
    if (alphabet_[a] == name) return a;
  }
  throw InputError("unknown symbol '" + std::string(name) + "'");
}

void AutomatonBuilder::set_initial(StateId q, bool value) { initial_.at(q) = value; }
void AutomatonBuilder::set_final(StateId q, bool value) { final_.at(q) = value; }

void AutomatonBuilder::add_transition(StateId src, SymbolId a, Weight w,
                                      StateId dst) {
  transitions_.push_back(Transition{src, a, w, dst});
}

void AutomatonBuilder::add_transition(std::string_view src, std::string_view a,
                                      Weight w, std::string_view dst) {
  add_transition(state(src), symbol(a), w, state(dst));
}

WeightedAutomaton AutomatonBuilder::build() const {
  std::vector<StateId> init, fin;
  for (StateId q = 0; q < names_.size(); ++q) {
    if (initial_[q]) init.push_back(q);
    if (final_[q]) fin.push_back(q);
  }
  return WeightedAutomaton(alphabet_, names_, std::move(init), std::move(fin),
                           transitions_);
}

Word parse_word(const WeightedAutomaton& n, std::string_view text) {
  return parse_word(n.alphabet(), text);
}

Word parse_word(const std::vector<std::string>& alphabet,
                std::string_view text) {
  auto lookup = [&](std::string_view s) -> SymbolId {
    for (SymbolId a = 0; a < alphabet.size(); ++a) {
      if (alphabet[a] == s) return a;
    }
    throw InputError("symbol '" + std::string(s) + "' is not in the alphabet");
  };
  bool single = std::all_of(alphabet.begin(), alphabet.end(),
                            [](const std::string& s) { return s.size() == 1; });
  Word w;
  if (text.empty()) return w;
  if (single && text.find(',') == std::string_view::npos) {
    for (char c : text) w.push_back(lookup(std::string_view(&c, 1)));
    return w;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    w.push_back(lookup(text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

std::string format_word(const std::vector<std::string>& alphabet,
                        const Word& w) {
  bool single = std::all_of(alphabet.begin(), alphabet.end(),
                            [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ',';
    out += alphabet.at(w[i]);
  }
  return out;
}

std::vector<Word> all_words(std::size_t num_symbols, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (SymbolId a = 0; a < num_symbols; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace wadet
