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

#ifndef WADET_DECIDERS_HPP_
#define WADET_DECIDERS_HPP_

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wadet/automaton.hpp"
#include "wadet/core.hpp"
#include "wadet/egames.hpp"
#include "wadet/mealy.hpp"

namespace wadet {

struct JokerVertex {
  enum class Kind : std::uint8_t { kPair, kChoice, kResponse, kBottom };
  Kind kind = Kind::kPair;
  StateId p = 0;
  StateId q = 0;
  StateId p2 = 0;  // Eve's target, kResponse only
  SymbolId a = 0;
};

/// Joker game on a trim automaton. Vertices: (p,q) Adam, (p,q,a) Eve,
/// (p,q,p',a) Adam, bottom Eve.
struct JokerGame {
  WeightedAutomaton automaton;  // the trimmed input the labels refer to
  EgrArena arena;
  std::vector<JokerVertex> labels;
  std::map<std::pair<StateId, StateId>, VertexId> pair_vertex;

  std::optional<VertexId> vertex_of(StateId p, StateId q) const;
};

// Full arena over all pairs of states of trim(n).
JokerGame build_joker_game(const WeightedAutomaton& n,
                           const Budget& budget = {});
// Part of the arena reachable from the given pairs (states of trim(n)).
JokerGame build_joker_game(const WeightedAutomaton& n,
                           const std::vector<std::pair<StateId, StateId>>& roots,
                           const Budget& budget = {});

enum class JokerScope { kReachable, kFull };

struct JokerOptions {
  JokerScope scope = JokerScope::kReachable;
  bool compute_credits = false;
  EgrOptions egr;
  Budget budget;
};

struct JokerResult {
  bool won = false;
  std::optional<StateId> initial_choice;  // p_I, state of game.automaton
  std::vector<std::pair<StateId, StateId>> region;  // W^JG, sorted
  std::map<std::pair<StateId, StateId>, Weight> credits;
  Weight credit = 0;  // |V| mu_max of the arena used
  JokerGame game;
};

JokerResult joker_win(const WeightedAutomaton& n, const JokerOptions& opts = {});

enum class JokerBound {
  kCredit,    // twice the least credit winning every W^JG pair
  kArenaCap,  // 2 |V| mu_max
};

// Bound B handed to bounded_determinize for a won Joker game.
Weight joker_bound(const JokerResult& jr, JokerBound policy,
                   const EgrOptions& egr = {});

struct DeterminizeResult {
  WeightedAutomaton automaton;
  Weight bound = 0;
};

DeterminizeResult determinize_via_joker_detailed(
    const WeightedAutomaton& n, JokerBound policy = JokerBound::kCredit,
    const JokerOptions& opts = {});
WeightedAutomaton determinize_via_joker(const WeightedAutomaton& n,
                                        JokerBound policy = JokerBound::kCredit,
                                        const JokerOptions& opts = {});

struct RegretVertex {
  enum class Kind : std::uint8_t {
    kPair, kChoice, kTop, kBottom, kRegret1, kRegret2
  };
  Kind kind = Kind::kPair;
  StateId p = 0;   // state of N
  StateId q = 0;   // state of D
  StateId q2 = 0;  // D's successor, kChoice only
  SymbolId a = 0;
};

struct RegretGame {
  EgrArena arena;
  std::vector<RegretVertex> labels;
  std::map<std::pair<StateId, StateId>, VertexId> pair_vertex;
  // (p, q, q', a) -> Eve vertex
  std::map<std::tuple<StateId, StateId, StateId, SymbolId>, VertexId> choice_vertex;
  Weight offset = 0;  // |Q'| (w_max + w'_max)
};

// Arena reachable from (p, q_I') for every p in I. existential drops the
// regret gadget. n and d must share the alphabet; d must be deterministic.
RegretGame build_regret_energy_game(const WeightedAutomaton& n,
                                    const WeightedAutomaton& d, Weight r,
                                    bool existential = false,
                                    const Budget& budget = {});

enum class Question { kKDelay, kZeroDelay, kRegret, kExistsRegret, kSemiAlgorithm };

std::string question_name(Question q);

struct Decision {
  Question question = Question::kRegret;
  bool answer = false;
  std::optional<unsigned> k;
  std::optional<Weight> r;
  // Automaton the strategy plays on: trim(N), P(N) or the delay-subset
  // automaton.
  std::optional<WeightedAutomaton> base;
  std::optional<MealyMachine> strategy;
  std::optional<WeightedAutomaton> witness;
  std::optional<Homomorphism> witness_projection;  // witness -> base
  bool joker_won = false;
  std::optional<StateId> initial_choice;
  std::vector<std::pair<StateId, StateId>> joker_region;
  std::optional<Weight> joker_credit;
  std::optional<Weight> bound;         // B used for bounded determinization
  std::optional<Weight> regret_bound;  // existential question
  std::optional<Weight> energy_credit; // least credit at the chosen root
  std::size_t base_states = 0;
  std::size_t det_states = 0;
  std::size_t arena_vertices = 0;
  std::vector<std::string> notes;
};

struct DeciderOptions {
  Budget budget;
  EgrOptions egr;
  JokerBound joker_bound = JokerBound::kCredit;
};

Decision decide_r_regret(const WeightedAutomaton& n, Weight r,
                         const DeciderOptions& opts = {});
Decision decide_exists_regret(const WeightedAutomaton& n,
                              const DeciderOptions& opts = {});
Decision decide_0_delay(const WeightedAutomaton& n,
                        const DeciderOptions& opts = {});
Decision decide_k_delay(const WeightedAutomaton& n, unsigned k,
                        const DeciderOptions& opts = {});
Decision semialgorithm_determinize(const WeightedAutomaton& n, unsigned k_max,
                                   const DeciderOptions& opts = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  bool inconclusive = false;
  std::string detail;  // counterexample or reason
};

struct VerifyReport {
  std::size_t horizon = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Oracle checks on a yes-decision's witness at a bounded horizon.
VerifyReport verify_witness(const WeightedAutomaton& n, const Decision& d,
                            std::size_t horizon = 6);

}  // namespace wadet

#endif  // WADET_DECIDERS_HPP_
