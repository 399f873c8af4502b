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

#include <gtest/gtest.h>

#include "support.hpp"
#include "wadet/constructions.hpp"
#include "wadet/core.hpp"
#include "wadet/corpus.hpp"
#include "wadet/deciders.hpp"
#include "wadet/oracle.hpp"

namespace wadet {
namespace {

using testing::value;
using testing::word;

std::optional<Transition> only_transition(const WeightedAutomaton& d, StateId q,
                                          SymbolId a) {
  auto ts = d.out(q, a);
  if (ts.empty()) return std::nullopt;
  return ts.front();
}

TEST(PairDeterminize, DeterministicInputIsCopied) {
  WeightedAutomaton d = corpus::make_fig1_right(2);
  WeightedAutomaton p = pair_determinize(d);
  EXPECT_EQ(p.num_states(), d.num_states());
  EXPECT_EQ(p.num_transitions(), d.num_transitions());
  EXPECT_TRUE(oracle::equivalence_check(d, p, 6).passed());
  EXPECT_EQ(p.state_name(0), "{qi}");
}

TEST(PairDeterminize, Fig1LeftFirstStep) {
  WeightedAutomaton n = corpus::make_fig1_left(2);
  auto lab = pair_determinize_labeled(n);
  const WeightedAutomaton& p = lab.automaton;
  auto ts = p.out(0, n.find_symbol("a").value());
  ASSERT_EQ(ts.size(), 2u);
  std::map<Weight, SubsetState> got;
  for (const Transition& t : ts) got[t.weight] = lab.states[t.dst];
  EXPECT_EQ(got[-2], SubsetState{*n.find_state("s0")});
  EXPECT_EQ(got[2], SubsetState{*n.find_state("s1")});
  EXPECT_TRUE(is_pair_deterministic(p));
  EXPECT_TRUE(check_k_inclusion(p, n, 0, 5));
  EXPECT_TRUE(check_k_inclusion(n, p, 0, 5));
}

TEST(PairDeterminize, SingleInitialSubset) {
  WeightedAutomaton n = corpus::make_maxab();
  auto lab = pair_determinize_labeled(n);
  ASSERT_EQ(lab.automaton.initial().size(), 1u);
  EXPECT_EQ(lab.states[lab.automaton.initial().front()], (SubsetState{0, 1}));
}

TEST(DelayConstruct, ZeroIsACopy) {
  WeightedAutomaton n = corpus::make_fig3();
  WeightedAutomaton d = delay_construct(n, 0);
  EXPECT_EQ(d.num_states(), n.num_states());
  EXPECT_EQ(d.num_transitions(), n.num_transitions());
  for (const Transition& t : n.transitions()) {
    EXPECT_EQ(d.weight(t.src, t.symbol, t.dst), t.weight);
  }
}

TEST(DelayConstruct, SelfLoopWeights) {
  WeightedAutomaton n = testing::one_state_loop(0);
  WeightedAutomaton d = delay_construct(n, 1);
  EXPECT_EQ(d.num_states(), 3u);
  StateId q0 = *d.find_state("(q,0)"), q1 = *d.find_state("(q,1)");
  EXPECT_EQ(d.weight(q0, 0, q1), -1);
  EXPECT_EQ(d.weight(q1, 0, q0), 1);
  EXPECT_TRUE(d.is_initial(q0));
  EXPECT_TRUE(d.is_final(q0));
  EXPECT_FALSE(d.is_final(q1));
}

TEST(DelayConstruct, PreservesValues) {
  WeightedAutomaton n = corpus::make_fig1_left(2);
  for (unsigned k = 0; k <= 3; ++k) {
    EXPECT_TRUE(oracle::equivalence_check(n, delay_construct(n, k), 5).passed()) << k;
  }
}

TEST(DelaySubset, KZeroMatchesPairDeterminize) {
  for (const auto& n : {corpus::make_fig1_left(2), corpus::make_fig3(),
                        corpus::make_jpair(2), corpus::make_maxab()}) {
    WeightedAutomaton a = delay_subset_construct(n, 0);
    WeightedAutomaton b = pair_determinize(n);
    EXPECT_EQ(a.num_states(), b.num_states());
    EXPECT_EQ(a.num_transitions(), b.num_transitions());
    EXPECT_TRUE(oracle::equivalence_check(a, b, 5).passed());
  }
}

TEST(DelaySubset, FusedEqualsComposed) {
  WeightedAutomaton n = corpus::make_fig1_left(2);
  for (unsigned k = 0; k <= 3; ++k) {
    WeightedAutomaton fused = delay_subset_construct(n, k);
    WeightedAutomaton composed = pair_determinize(delay_construct(n, k));
    EXPECT_EQ(fused, composed) << k;
    EXPECT_TRUE(oracle::equivalence_check(fused, composed, 5).passed());
  }
}

TEST(DelaySubset, BudgetIsEnforced) {
  Budget tiny;
  tiny.max_states = 3;
  EXPECT_THROW(delay_subset_construct(corpus::make_jpair(2), 2, tiny), BudgetExceeded);
}

TEST(BoundedDeterminize, OneStateLoop) {
  WeightedAutomaton n = testing::one_state_loop(1);
  WeightedAutomaton d = bounded_determinize(n, 0);
  EXPECT_TRUE(is_deterministic(d));
  EXPECT_EQ(evaluate(d, word(n, "aaa")), value(3));
}

TEST(BoundedDeterminize, Fig3WithJokerBound) {
  WeightedAutomaton n = corpus::make_fig3();
  JokerResult jr = joker_win(n);
  ASSERT_TRUE(jr.won);
  for (JokerBound policy : {JokerBound::kCredit, JokerBound::kArenaCap}) {
    Weight b = joker_bound(jr, policy, {});
    WeightedAutomaton d = bounded_determinize(trim(n), b);
    EXPECT_TRUE(is_deterministic(d));
    EXPECT_TRUE(oracle::equivalence_check(n, d, 6).passed());
  }
}

TEST(BoundedDeterminize, RequiresTrimInput) {
  EXPECT_THROW(bounded_determinize(corpus::make_fig1_left(2), 4), PreconditionError);
}

// Initial runs on w with their values, by plain recursion.
void initial_runs(const WeightedAutomaton& n, const Word& w, std::size_t i,
                  std::vector<StateId>& states, Weight sum,
                  std::vector<std::pair<std::vector<StateId>, Weight>>& out) {
  if (i == w.size()) {
    out.emplace_back(states, sum);
    return;
  }
  for (const Transition& t : n.out(states.back(), w[i])) {
    states.push_back(t.dst);
    initial_runs(n, w, i + 1, states, sum + t.weight, out);
    states.pop_back();
  }
}

std::vector<std::pair<std::vector<StateId>, Weight>> all_initial_runs(
    const WeightedAutomaton& n, const Word& w) {
  std::vector<std::pair<std::vector<StateId>, Weight>> out;
  for (StateId q : n.initial()) {
    std::vector<StateId> s{q};
    initial_runs(n, w, 0, s, 0, out);
  }
  return out;
}

Weight prefix_sum(const WeightedAutomaton& n, const Word& w,
                  const std::vector<StateId>& s, std::size_t i) {
  Weight sum = 0;
  for (std::size_t j = 0; j < i; ++j) sum += *n.weight(s[j], w[j], s[j + 1]);
  return sum;
}

// Checks the three run properties of the bounded determinization on every
// word up to the horizon.
void check_bounded_properties(const WeightedAutomaton& n, Weight b,
                              std::size_t horizon) {
  auto lab = bounded_determinize_labeled(n, b);
  const WeightedAutomaton& d = lab.automaton;
  for (const BoundedDetState& g : lab.states) {
    bool any_final = false, zero_final = false;
    for (StateId q = 0; q < n.num_states(); ++q) {
      if (!g[q] || !n.is_final(q)) continue;
      EXPECT_LE(*g[q], 0);
      any_final = true;
      zero_final = zero_final || *g[q] == 0;
    }
    EXPECT_EQ(any_final, zero_final);
  }
  for (const Word& w : all_words(n.num_symbols(), horizon)) {
    StateId g = d.initial().front();
    Weight wn = 0;
    bool alive = true;
    for (SymbolId a : w) {
      auto t = only_transition(d, g, a);
      if (!t) {
        alive = false;
        break;
      }
      wn += t->weight;
      g = t->dst;
    }
    auto runs = all_initial_runs(n, w);
    if (!alive) {
      continue;
    }
    const BoundedDetState& gn = lab.states[g];
    for (StateId q = 0; q < n.num_states(); ++q) {
      if (!gn[q]) continue;
      bool found = false;
      for (const auto& [s, v] : runs) found = found || (s.back() == q && v == wn + *gn[q]);
      EXPECT_TRUE(found) << "P2 " << format_word(n.alphabet(), w) << " " << n.state_name(q);
    }
    for (const auto& [s, v] : runs) {
      bool good = true;
      for (std::size_t i = 0; i <= w.size() && good; ++i) {
        Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        Weight mine = prefix_sum(n, w, s, i);
        for (const auto& [s2, v2] : all_initial_runs(n, pre)) {
          if (mine < v2 - b) good = false;
        }
      }
      if (!good) continue;
      ASSERT_TRUE(gn[s.back()].has_value()) << "P3 " << format_word(n.alphabet(), w);
      EXPECT_GE(wn + *gn[s.back()], v) << "P3 " << format_word(n.alphabet(), w);
    }
  }
}

TEST(BoundedDeterminize, RunPropertiesOnCorpus) {
  check_bounded_properties(trim(corpus::make_fig3()), 2, 4);
  check_bounded_properties(trim(corpus::make_fig1_left(2)), 4, 4);
  check_bounded_properties(trim(corpus::make_fig1_left(2)), 1, 4);
  check_bounded_properties(trim(corpus::make_quadregret(2)), 3, 5);
}

TEST(BoundedDeterminize, RunPropertiesOnRandomAutomata) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    std::mt19937_64 rng(testing::kSeedBase + i);
    WeightedAutomaton n = trim(oracle::random_automaton(rng));
    for (Weight b : {0, 2, 5}) check_bounded_properties(n, b, 4);
  }
}

TEST(RangeBound, Formula) {
  AutomatonBuilder bld({"a"});
  for (int i = 0; i < 4; ++i) bld.add_state("q" + std::to_string(i), i == 0, i == 3);
  bld.add_transition(StateId{0}, 0, 3, StateId{1});
  EXPECT_EQ(range_bound(bld.build(), 2), 30);
}

TEST(RangeBound, ZeroValuedAutomaton) {
  AutomatonBuilder b({"a", "b"});
  b.add_state("p", true, true);
  b.add_state("q", true, false);
  b.add_state("r");
  b.add_transition("p", "a", 0, "p");
  b.add_transition("q", "a", 1, "r");
  b.add_transition("r", "b", -1, "p");
  b.add_transition("r", "b", 0, "r");
  b.add_transition("p", "b", 0, "p");
  WeightedAutomaton n = b.build();
  // Every accepting run has value 0.
  WeightedAutomaton d = range_bound_determinize(trim(n), 0);
  EXPECT_TRUE(is_deterministic(d));
  EXPECT_TRUE(oracle::equivalence_check(n, d, 6).passed());
}

MealyMachine fig3_right_branch() {
  return MealyMachine(3, 2, 0, 0, {1, 2, 2, 2, 2, 2}, {2, 2, 4, 4, 4, 4});
}

TEST(Exactify, Fig3WithRegretOneDeterminizer) {
  WeightedAutomaton n = corpus::make_fig3();
  WeightedAutomaton d = strategy_product(n, fig3_right_branch());
  WeightedAutomaton m = trim(difference_product(n, d));
  WeightedAutomaton dm = range_bound_determinize(m, 1);
  EXPECT_TRUE(oracle::equivalence_check(m, dm, 6).passed());
  WeightedAutomaton e = exactify(n, d, 1);
  EXPECT_TRUE(is_deterministic(e));
  EXPECT_TRUE(oracle::equivalence_check(n, e, 6).passed());
}

TEST(Exactify, EquivalentInputIsKept) {
  WeightedAutomaton d = corpus::make_fig1_right(2);
  WeightedAutomaton e = exactify(corpus::make_fig1_left(2), d, 0);
  EXPECT_TRUE(is_deterministic(e));
  EXPECT_TRUE(oracle::equivalence_check(d, e, 6).passed());
}

TEST(Exactify, RejectsRangeViolation) {
  WeightedAutomaton n = corpus::make_fig3();
  WeightedAutomaton d = strategy_product(n, fig3_right_branch());
  EXPECT_THROW(exactify(n, d, 0), PreconditionError);
}

}  // namespace
}  // namespace wadet
