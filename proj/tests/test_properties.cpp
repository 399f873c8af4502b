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

// Randomized property suites over small automata.

#include <gtest/gtest.h>

#include <optional>
#include <set>

#include "support.hpp"
#include "wadet/constructions.hpp"
#include "wadet/core.hpp"
#include "wadet/deciders.hpp"
#include "wadet/oracle.hpp"

namespace wadet {
namespace {

constexpr std::uint64_t kCases = 40;
constexpr std::size_t kHorizon = 5;

WeightedAutomaton random_trim(std::uint64_t salt, std::uint64_t i,
                              oracle::RandomAutomatonParams p = {}) {
  std::mt19937_64 rng(testing::kSeedBase + salt + i);
  return trim(oracle::random_automaton(rng, p));
}

std::string seed_text(std::uint64_t salt, std::uint64_t i) {
  return oracle::describe({}, testing::kSeedBase + salt + i);
}

// The delay-subset construction is exponential in |Q|(2k+1); instances that
// blow past this budget are skipped and counted.
DeciderOptions small_budget() {
  DeciderOptions opts;
  opts.budget.max_states = 600;
  opts.budget.max_arena = 20000;
  return opts;
}

std::optional<Decision> bounded_k_delay(const WeightedAutomaton& n, unsigned k) {
  try {
    return decide_k_delay(n, k, small_budget());
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

constexpr std::size_t kMinDecided = kCases / 2;

TEST(ConstructionProperties, EvaluateMatchesRunEnumeration) {
  for (std::uint64_t i = 0; i < kCases; ++i) {
    std::mt19937_64 rng(testing::kSeedBase + 100 + i);
    WeightedAutomaton n = oracle::random_automaton(rng);
    for (const Word& w : all_words(n.num_symbols(), kHorizon)) {
      ASSERT_EQ(evaluate(n, w), oracle::brute_value(n, w)) << seed_text(100, i);
    }
    EXPECT_TRUE(oracle::equivalence_check(n, trim(n), kHorizon).passed());
  }
}

TEST(ConstructionProperties, SubsetAndDelayConstructions) {
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(200, i);
    WeightedAutomaton p = pair_determinize(n);
    EXPECT_TRUE(is_pair_deterministic(p));
    EXPECT_TRUE(check_k_inclusion(p, n, 0, kHorizon)) << seed_text(200, i);
    EXPECT_TRUE(check_k_inclusion(n, p, 0, kHorizon)) << seed_text(200, i);
    EXPECT_TRUE(oracle::equivalence_check(n, p, kHorizon).passed());
    for (unsigned k = 0; k <= 2; ++k) {
      WeightedAutomaton d = delay_construct(n, k);
      EXPECT_TRUE(check_k_inclusion(d, n, k, kHorizon)) << seed_text(200, i) << " k=" << k;
      EXPECT_TRUE(oracle::equivalence_check(n, d, kHorizon).passed());
      WeightedAutomaton fused = delay_subset_construct(n, k);
      WeightedAutomaton composed = pair_determinize(d);
      EXPECT_EQ(fused, composed);
      EXPECT_TRUE(oracle::equivalence_check(fused, composed, kHorizon).passed());
      for (unsigned k2 = k; k2 <= 3; ++k2) {
        if (check_k_inclusion(p, n, k, kHorizon)) {
          EXPECT_TRUE(check_k_inclusion(p, n, k2, kHorizon));
        }
      }
    }
  }
}

TEST(ConstructionProperties, DelayConstructionIsUniversal) {
  std::size_t decided = 0;
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(300, i);
    for (unsigned k = 0; k <= 2; ++k) {
      std::optional<Decision> res = bounded_k_delay(n, k);
      if (!res) continue;
      if (k == 2) ++decided;
      if (!res->answer) continue;
      const WeightedAutomaton& m = *res->witness;
      ASSERT_TRUE(check_k_inclusion(m, n, k, kHorizon));
      EXPECT_TRUE(check_k_inclusion(m, delay_construct(n, k), 0, kHorizon))
          << seed_text(300, i) << " k=" << k;
    }
  }
  EXPECT_GE(decided, kMinDecided);
}

TEST(ConstructionProperties, HomomorphismImpliesDomination) {
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(400, i);
    Decision dec = decide_exists_regret(n);
    if (!dec.answer) continue;
    const WeightedAutomaton& d = *dec.witness;
    ASSERT_TRUE(check_homomorphism(*dec.witness_projection, d, *dec.base));
    for (const Word& w : all_words(n.num_symbols(), kHorizon)) {
      ExtendedWeight vd = evaluate(d, w), vn = evaluate(*dec.base, w);
      if (vd.is_bottom()) continue;
      ASSERT_FALSE(vn.is_bottom());
      EXPECT_LE(vd.value(), vn.value());
    }
  }
}

std::set<std::pair<StateId, StateId>> full_region(const WeightedAutomaton& n) {
  JokerOptions o;
  o.scope = JokerScope::kFull;
  JokerResult jr = joker_win(n, o);
  return {jr.region.begin(), jr.region.end()};
}

// Closed choice: a successor p' of p on a such that every successor
// of p or q on a pairs with p' inside the region.
std::optional<StateId> closed_choice(const WeightedAutomaton& n,
                                     const std::set<std::pair<StateId, StateId>>& w,
                                     StateId p, StateId q, SymbolId a) {
  for (const Transition& tp : n.out(p, a)) {
    bool ok = true;
    for (StateId t : {p, q}) {
      for (const Transition& tt : n.out(t, a)) ok = ok && w.count({tp.dst, tt.dst});
    }
    if (ok) return tp.dst;
  }
  return std::nullopt;
}

TEST(JokerProperties, RegionIsTransitive) {
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(500, i);
    auto w = full_region(n);
    for (auto [p, q] : w) {
      for (StateId t = 0; t < n.num_states(); ++t) {
        if (w.count({q, t})) {
          EXPECT_TRUE(w.count({p, t})) << seed_text(500, i);
        }
      }
    }
  }
}

TEST(JokerProperties, SuccessorClosure) {
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(600, i);
    auto w = full_region(n);
    for (auto [p, q] : w) {
      EXPECT_TRUE(!n.is_final(q) || n.is_final(p));
      for (SymbolId a = 0; a < n.num_symbols(); ++a) {
        if (n.out(q, a).empty()) continue;
        EXPECT_TRUE(closed_choice(n, w, p, q, a).has_value())
            << seed_text(600, i) << " (" << p << "," << q << ")";
      }
    }
  }
}

bool runs_stay_inside(const WeightedAutomaton& n,
                      const std::set<std::pair<StateId, StateId>>& w, StateId p,
                      StateId q, std::size_t depth) {
  if (!w.count({p, q})) return false;
  if (depth == 0) return true;
  for (SymbolId a = 0; a < n.num_symbols(); ++a) {
    if (n.out(q, a).empty()) continue;
    auto next = closed_choice(n, w, p, q, a);
    if (!next) return false;
    for (const Transition& t : n.out(q, a)) {
      if (!runs_stay_inside(n, w, *next, t.dst, depth - 1)) return false;
    }
    for (const Transition& t : n.out(p, a)) {
      if (!runs_stay_inside(n, w, *next, t.dst, depth - 1)) return false;
    }
  }
  return true;
}

TEST(JokerProperties, RunClosure) {
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(700, i);
    JokerResult jr = joker_win(n);
    if (!jr.won) continue;
    auto w = full_region(n);
    for (StateId q : n.initial()) {
      EXPECT_TRUE(runs_stay_inside(n, w, *jr.initial_choice, q, 4)) << seed_text(700, i);
    }
  }
}

TEST(JokerProperties, WinningAutomataAreBounded) {
  std::size_t winners = 0;
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(800, i);
    JokerResult jr = joker_win(n);
    if (!jr.won) continue;
    ++winners;
    for (JokerBound k : {JokerBound::kCredit, JokerBound::kArenaCap}) {
      Weight b = joker_bound(jr, k, {});
      auto rep = oracle::brute_bound_check(n, b, kHorizon);
      EXPECT_TRUE(rep.passed()) << seed_text(800, i) << " " << rep.counterexample;
    }
    WeightedAutomaton d = determinize_via_joker(n);
    EXPECT_TRUE(oracle::equivalence_check(n, d, kHorizon).passed()) << seed_text(800, i);
  }
  EXPECT_GT(winners, kCases / 4);
}

TEST(DeciderProperties, MonotoneAndCoherent) {
  std::size_t decided = 0;
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(900, i);
    const bool joker = joker_win(n).won;
    bool prev = false;
    for (Weight r = 0; r <= 3; ++r) {
      Decision d = decide_r_regret(n, r);
      EXPECT_TRUE(!prev || d.answer) << seed_text(900, i) << " r=" << r;
      prev = d.answer;
      if (d.answer) {
        EXPECT_TRUE(joker) << seed_text(900, i);
        EXPECT_TRUE(verify_witness(n, d, kHorizon).passed()) << seed_text(900, i);
      }
      if (r == 0 && d.answer) {
        EXPECT_TRUE(decide_0_delay(n).answer) << seed_text(900, i);
      }
    }
    prev = false;
    for (unsigned k = 0; k <= 2; ++k) {
      std::optional<Decision> d = bounded_k_delay(n, k);
      if (!d) break;
      if (k == 2) ++decided;
      EXPECT_TRUE(!prev || d->answer) << seed_text(900, i) << " k=" << k;
      prev = d->answer;
      if (d->answer) {
        EXPECT_TRUE(verify_witness(n, *d, kHorizon).passed()) << seed_text(900, i);
      }
    }
  }
  EXPECT_GE(decided, kMinDecided);
}

TEST(DeciderProperties, ScalingPreservesAnswers) {
  oracle::RandomAutomatonParams tiny;
  tiny.max_states = 3;
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(1000, i, tiny);
    WeightedAutomaton s = scale(n, 5);
    const bool a = decide_0_delay(n).answer;
    EXPECT_EQ(a, decide_0_delay(s).answer) << seed_text(1000, i);
    EXPECT_EQ(a, decide_k_delay(s, 1).answer) << seed_text(1000, i);
  }
}

TEST(DeciderProperties, ExistentialBoundIsSound) {
  for (std::uint64_t i = 0; i < kCases; ++i) {
    WeightedAutomaton n = random_trim(1100, i);
    Decision d = decide_exists_regret(n);
    EXPECT_EQ(d.answer, joker_win(n).won) << seed_text(1100, i);
    if (!d.answer) continue;
    ASSERT_TRUE(d.regret_bound.has_value());
    EXPECT_TRUE(verify_witness(n, d, kHorizon).passed()) << seed_text(1100, i);
    EXPECT_TRUE(decide_r_regret(n, *d.regret_bound).answer) << seed_text(1100, i);
  }
}

}  // namespace
}  // namespace wadet
