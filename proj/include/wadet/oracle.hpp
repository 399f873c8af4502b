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

#ifndef WADET_ORACLE_HPP_
#define WADET_ORACLE_HPP_

// Brute-force reference implementations. Nothing here reuses the traversal or
// fixpoint code of the production modules.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wadet/automaton.hpp"
#include "wadet/egames.hpp"
#include "wadet/errors.hpp"
#include "wadet/mealy.hpp"

namespace wadet::oracle {

struct Limits {
  std::size_t max_word_length = 6;
  std::size_t max_runs = 1000000;
};

// Thrown when an enumeration cap is hit.
class LimitExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

enum class Status { kPass, kFail, kInconclusive };

struct OracleReport {
  std::string check;
  std::size_t horizon = 0;
  Status status = Status::kPass;
  std::string counterexample;
  std::string parameters;

  bool passed() const { return status == Status::kPass; }
};

std::string status_name(Status s);

// Value by explicit enumeration of accepting runs.
ExtendedWeight brute_value(const WeightedAutomaton& n, const Word& w,
                           const Limits& limits = {});

struct RegretOutcome {
  ExtendedWeight value;  // bottom when no word of L(N) has length <= L
  bool infinite = false; // the strategy's run is not accepting on some word
  std::optional<Word> worst_word;
};

RegretOutcome brute_regret(const WeightedAutomaton& n, const MealyMachine& m,
                           std::size_t horizon, const Limits& limits = {});

// Least k for which D is k-included in N on words <= horizon; nullopt if some
// accepting run of D has no equal-valued accepting run of N.
std::optional<Weight> brute_min_delay(const WeightedAutomaton& d,
                                      const WeightedAutomaton& n,
                                      std::size_t horizon,
                                      const Limits& limits = {});

struct EgrOracleOptions {
  bool ignore_resets = false;
};

// Greatest fixpoint over (vertex, credit) with the credit clamped at
// 2 |V| w_max + 1.
bool brute_egr(const EgrArena& g, VertexId v, Weight c0,
               const EgrOracleOptions& opts = {});
std::vector<std::vector<bool>> brute_egr_table(const EgrArena& g, Weight c0,
                                               const EgrOracleOptions& opts = {});

enum class Player { kEve, kAdam };

// Winner of a lasso given as edge ids: a simple path closing one cycle.
Player first_cycle_winner(const EgrArena& g, const std::vector<EdgeId>& lasso);
// Winner of the first cycle game from v by exhaustive game-tree search.
Player brute_first_cycle_game(const EgrArena& g, VertexId v);

// Replays the strategy against every Adam play of the given depth and checks
// the energy never drops below zero.
OracleReport check_strategy_plays(const EgrArena& g, const PositionalStrategy& s,
                                  VertexId v, Weight c0, std::size_t depth);

OracleReport brute_bound_check(const WeightedAutomaton& n, Weight b,
                               std::size_t horizon, const Limits& limits = {});

OracleReport equivalence_check(const WeightedAutomaton& a,
                               const WeightedAutomaton& b, std::size_t horizon);

// Same domain on words <= horizon (both defined or both bottom).
OracleReport domain_check(const WeightedAutomaton& a, const WeightedAutomaton& b,
                          std::size_t horizon);

std::optional<Weight> min_regret_sweep(const WeightedAutomaton& n, Weight r_max);

struct RandomAutomatonParams {
  std::size_t min_states = 1;
  std::size_t max_states = 5;
  std::size_t num_symbols = 2;
  Weight min_weight = -2;
  Weight max_weight = 2;
  double density = 0.3;
  double initial_probability = 0.3;
  double final_probability = 0.4;
  bool require_nonempty_trim = true;
};

struct RandomArenaParams {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  Weight min_weight = -3;
  Weight max_weight = 3;
  double density = 0.3;
  double eve_probability = 0.5;
  double reset_probability = 0.2;
};

// Portable uniform draw in [0, bound).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);
Weight draw_weight(std::mt19937_64& rng, Weight lo, Weight hi);
bool draw_bool(std::mt19937_64& rng, double p);

WeightedAutomaton random_automaton(std::mt19937_64& rng,
                                   const RandomAutomatonParams& p = {});
EgrArena random_arena(std::mt19937_64& rng, const RandomArenaParams& p = {});

std::string describe(const RandomAutomatonParams& p, std::uint64_t seed);

}  // namespace wadet::oracle

#endif  // WADET_ORACLE_HPP_
