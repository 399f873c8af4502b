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

#ifndef WADET_CORPUS_HPP_
#define WADET_CORPUS_HPP_

// Fixtures for the worked examples and parametric families.

#include "wadet/automaton.hpp"
#include "wadet/egames.hpp"

namespace wadet::corpus {

// Maps A a A* to 0 and A b A* to 1, using delays of up to k.
WeightedAutomaton make_fig1_left(Weight k);
// A DWA equivalent to make_fig1_left; its shape does not depend on k.
WeightedAutomaton make_fig1_right(Weight k);

// A finite-language automaton and a DWA determinizer with delay 2k.
WeightedAutomaton make_fig2_left(Weight k);
WeightedAutomaton make_fig2_right(Weight k);

// aa -> 1 and ab -> 0: needs regret 1 to be played deterministically.
WeightedAutomaton make_fig3();

// Alphabet {1..n}, 3n + 1 states. Outputs minus the length of a word with no
// j-pair and 0 otherwise.
WeightedAutomaton make_jpair(unsigned n);
// alpha_1 = 1, alpha_i = alpha_{i-1} i alpha_{i-1}.
Word word_without_jpair(unsigned n);
// True if some j occurs twice with only letters smaller than j in between.
bool has_jpair(const Word& w);

// 2(k + 1) + 1 states, minimal regret k^2.
WeightedAutomaton make_quadregret(unsigned k);

// max(#a, #b).
WeightedAutomaton make_maxab();

// v0 (eve) -> v1 (adam) -> {v0, v2 by a reset}, v2 (eve) -> v0.
EgrArena make_egr_example();

}  // namespace wadet::corpus

#endif  // WADET_CORPUS_HPP_
