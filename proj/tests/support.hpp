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

#ifndef WADET_TESTS_SUPPORT_HPP_
#define WADET_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <string>

#include "wadet/automaton.hpp"
#include "wadet/weight.hpp"

namespace wadet::testing {

inline Word word(const WeightedAutomaton& n, const std::string& text) {
  return parse_word(n.alphabet(), text);
}

inline ExtendedWeight value(Weight x) { return ExtendedWeight(x); }

// Seeds for the randomized suites. Fixed so failures replay.
inline constexpr std::uint64_t kSeedBase = 20260101;

// One state with the given loops over {a, b}; initial and final.
WeightedAutomaton one_state_loop(Weight wa, bool with_b = false, Weight wb = 0);

}  // namespace wadet::testing

#endif  // WADET_TESTS_SUPPORT_HPP_
