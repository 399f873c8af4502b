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

#ifndef WADET_CONSTRUCTIONS_HPP_
#define WADET_CONSTRUCTIONS_HPP_

#include <optional>
#include <vector>

#include "wadet/automaton.hpp"
#include "wadet/errors.hpp"

namespace wadet {

// Sorted, duplicate-free set of source states.
using SubsetState = std::vector<StateId>;

struct DelayState {
  StateId state = 0;
  Weight delay = 0;

  friend auto operator<=>(const DelayState&, const DelayState&) = default;
};

// Sorted set of (state, delay) pairs. One state may carry several delays:
// two runs into q with different sums give two delays after the same output.
using DelayFunctionState = std::vector<DelayState>;

// g(q) for every source state; nullopt is -inf.
using BoundedDetState = std::vector<std::optional<Weight>>;

template <class State>
struct Labeled {
  WeightedAutomaton automaton;
  std::vector<State> states;  // index = state of automaton
};

/// Pair-determinization P(N): reachable subsets from {I}; from U on a, one
/// transition per weight x to the set of x-weighted a-successors of U.
WeightedAutomaton pair_determinize(const WeightedAutomaton& n,
                                   const Budget& budget = {});
Labeled<SubsetState> pair_determinize_labeled(const WeightedAutomaton& n,
                                              const Budget& budget = {});

/// delta_k(N): states Q x {-k..k}, weights i + w(p,a,q) - j. State (q, i) has
/// index q * (2k+1) + i + k and is named "(q,i)".
WeightedAutomaton delay_construct(const WeightedAutomaton& n, unsigned k);

/// P(delta_k(N)) built directly on sets of (state, delay) pairs, without
/// materializing delta_k(N). Same state names and transitions as
/// pair_determinize(delay_construct(n, k)).
WeightedAutomaton delay_subset_construct(const WeightedAutomaton& n,
                                         unsigned k,
                                         const Budget& budget = {});
Labeled<DelayFunctionState> delay_subset_construct_labeled(
    const WeightedAutomaton& n, unsigned k, const Budget& budget = {});

/// Determinization with cutoff B. Exact when N is B-bounded. N must be trim.
WeightedAutomaton bounded_determinize(const WeightedAutomaton& n, Weight b,
                                      const Budget& budget = {});
Labeled<BoundedDetState> bounded_determinize_labeled(const WeightedAutomaton& n,
                                                     Weight b,
                                                     const Budget& budget = {});

// 3B + 2|Q| w_max.
Weight range_bound(const WeightedAutomaton& n, Weight b);
WeightedAutomaton range_bound_determinize(const WeightedAutomaton& n, Weight b,
                                          const Budget& budget = {});

/// Given a DWA D with L(D) = L(N) and |[[N]] - [[D]]| <= r, returns a DWA
/// equivalent to N: D times a determinization of trim(N - D). Words up to
/// check_horizon are checked against the range assumption first.
WeightedAutomaton exactify(const WeightedAutomaton& n,
                           const WeightedAutomaton& d, Weight r,
                           std::size_t check_horizon = 4,
                           const Budget& budget = {});

// Product of two DWAs on a common alphabet with weights added.
WeightedAutomaton sum_product(const WeightedAutomaton& d1,
                              const WeightedAutomaton& d2);

}  // namespace wadet

#endif  // WADET_CONSTRUCTIONS_HPP_
