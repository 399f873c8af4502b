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

#ifndef WADET_CORE_HPP_
#define WADET_CORE_HPP_

#include <optional>
#include <vector>

#include "wadet/automaton.hpp"
#include "wadet/mealy.hpp"

namespace wadet {

// states.size() == word.size() + 1.
struct Run {
  std::vector<StateId> states;
  Word word;
};

bool is_run(const WeightedAutomaton& n, const Run& r);
// Sum of transition weights; throws PreconditionError if r is not a run.
Weight run_value(const WeightedAutomaton& n, const Run& r);
bool is_accepting(const WeightedAutomaton& n, const Run& r);

// Value of the word: max over accepting runs, bottom if there is none.
ExtendedWeight evaluate(const WeightedAutomaton& n, const Word& w,
                        std::optional<std::size_t> max_len = std::nullopt);

bool is_deterministic(const WeightedAutomaton& n);
bool is_pair_deterministic(const WeightedAutomaton& n);

struct TrimResult {
  WeightedAutomaton automaton;
  std::vector<StateId> original;  // new state -> state of the input
};

// Keeps states that are reachable from I and co-reachable to F, in their
// original order.
WeightedAutomaton trim(const WeightedAutomaton& n);
TrimResult trim_with_map(const WeightedAutomaton& n);
bool is_trim(const WeightedAutomaton& n);

// Bounded-horizon check of D included in N with delay k: every accepting run
// of D of length <= horizon is matched by an accepting run of N with the same
// value whose prefix sums stay within k.
bool check_k_inclusion(const WeightedAutomaton& d, const WeightedAutomaton& n,
                       unsigned k, std::size_t horizon);
// Shortest word carrying an unmatched run of D, if any.
std::optional<Word> find_k_inclusion_violation(const WeightedAutomaton& d,
                                               const WeightedAutomaton& n,
                                               unsigned k,
                                               std::size_t horizon);

struct Homomorphism {
  std::vector<StateId> map;
};

bool check_homomorphism(const Homomorphism& mu, const WeightedAutomaton& d,
                        const WeightedAutomaton& n);

// Synchronized product of N with the strategy M. Only the part reachable from
// (initial_output, initial_memory) is built; state (q, s) is named "(q,s)".
WeightedAutomaton strategy_product(const WeightedAutomaton& n,
                                   const MealyMachine& m);
// First projection of strategy_product(n, m), state by state.
Homomorphism strategy_product_projection(const WeightedAutomaton& n,
                                         const MealyMachine& m);

// Product with weights w - w'; D must be deterministic.
WeightedAutomaton difference_product(const WeightedAutomaton& n,
                                     const WeightedAutomaton& d);

WeightedAutomaton scale(const WeightedAutomaton& n, Weight x);
// The unique g with |(4k+1) g - x| <= 2k.
Weight gamma(Weight x, unsigned k);
WeightedAutomaton gamma_round(const WeightedAutomaton& d, unsigned k);

Weight max_weight(const WeightedAutomaton& n);

// One-state automaton with no final state and no transitions.
WeightedAutomaton empty_language_automaton(const std::vector<std::string>& alphabet);

}  // namespace wadet

#endif  // WADET_CORE_HPP_
