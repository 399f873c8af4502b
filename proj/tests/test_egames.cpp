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

#include <deque>
#include <ostream>

#include "support.hpp"
#include "wadet/corpus.hpp"
#include "wadet/egames.hpp"
#include "wadet/oracle.hpp"

namespace wadet {

void PrintTo(EgrMethod m, std::ostream* os) {
  *os << (m == EgrMethod::kSafetyReduction ? "safety" : "fixpoint");
}

namespace {

EdgeId edge_between(const EgrArena& g, VertexId u, VertexId v) {
  for (EdgeId e = g.first_out(u); e < g.end_out(u); ++e) {
    if (g.edge(e).dst == v) return e;
  }
  return kNoEdge;
}

EgrArena single(Owner o, Weight w) {
  return EgrArena({"v"}, {o}, {Edge{0, 0, w, false}});
}

TEST(Arena, Validation) {
  EXPECT_THROW(EgrArena({"a", "b"}, {Owner::kEve, Owner::kEve}, {Edge{0, 1, 0, false}}),
               InputError);
  try {
    EgrArena({"a", "b"}, {Owner::kEve, Owner::kEve}, {Edge{0, 1, 0, false}});
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("arena has sink 'b'"), std::string::npos);
  }
  EXPECT_THROW(EgrArena({"a"}, {Owner::kEve}, {Edge{0, 0, 0, true}}), InputError);
  EXPECT_THROW(EgrArena({"a"}, {Owner::kEve}, {Edge{0, 3, 0, false}}), InputError);
  EXPECT_NO_THROW(EgrArena({"a"}, {Owner::kAdam}, {Edge{0, 0, 0, true}}));
}

TEST(Arena, ParallelEdgesAreKept) {
  EgrArena g({"a"}, {Owner::kAdam},
             {Edge{0, 0, 1, false}, Edge{0, 0, 1, true}, Edge{0, 0, -1, false},
              Edge{0, 0, 1, false}});
  EXPECT_EQ(g.num_edges(), 3u);
  std::vector<VertexId> path{0, 0};
  EXPECT_THROW(energy_level_vertices(g, path, 0), InputError);
}

TEST(Arena, Example) {
  EgrArena g = corpus::make_egr_example();
  EXPECT_EQ(g.num_vertices(), 3u);
  int resets = 0;
  for (const Edge& e : g.edges()) resets += e.reset;
  EXPECT_EQ(resets, 1);
  EXPECT_EQ(g.max_weight(), 2);
  EXPECT_EQ(g.credit_cap(), 6);
}

TEST(EnergyLevel, Example) {
  EgrArena g = corpus::make_egr_example();
  std::vector<VertexId> p1{0, 1}, p2{0, 1, 2, 0}, p3{2}, p4{0, 1, 0, 1};
  EXPECT_EQ(energy_level_vertices(g, p1, 2), 3);
  EXPECT_EQ(energy_level_vertices(g, p2, 2), 0);
  EXPECT_EQ(energy_level_vertices(g, p3, 7), 7);
  EXPECT_EQ(energy_level_vertices(g, p4, 2), 3);
  std::vector<EdgeId> edges{edge_between(g, 0, 1), edge_between(g, 1, 2)};
  EXPECT_EQ(energy_level(g, edges, 5), 5);
}

std::vector<bool> reachable(const SafetyArena& s, std::size_t from) {
  std::vector<bool> seen(s.num_vertices());
  std::deque<std::size_t> q{from};
  seen[from] = true;
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop_front();
    for (std::size_t i = s.first_succ(x); i < s.end_succ(x); ++i) {
      if (!seen[s.succ(i)]) {
        seen[s.succ(i)] = true;
        q.push_back(s.succ(i));
      }
    }
  }
  return seen;
}

TEST(Safety, NonnegativeArenaNeverReachesBottom) {
  EgrArena g({"a", "b"}, {Owner::kEve, Owner::kAdam},
             {Edge{0, 1, 2, false}, Edge{1, 0, 0, false}, Edge{1, 1, 1, true}});
  SafetyArena s = to_safety_game(g, 0);
  auto seen = reachable(s, s.id(0, 0));
  for (VertexId v = 0; v < 2; ++v) EXPECT_FALSE(seen[s.bottom(v)]);
  SafetySolution sol = solve_safety(s);
  for (VertexId v = 0; v < 2; ++v) {
    for (Weight l = 0; l <= s.cap(); ++l) EXPECT_TRUE(sol.eve_wins[s.id(v, l)]);
  }
}

TEST(Safety, ExampleAtCreditOne) {
  EgrArena g = corpus::make_egr_example();
  SafetyArena s = to_safety_game(g, 1);
  auto seen = reachable(s, s.id(0, 1));
  EXPECT_TRUE(seen[s.bottom(0)]);
  EXPECT_FALSE(solve_safety(s).eve_wins[s.id(0, 1)]);
}

TEST(Safety, ExampleAtCreditTwo) {
  EgrArena g = corpus::make_egr_example();
  SafetyArena s = to_safety_game(g, 2);
  EXPECT_TRUE(solve_safety(s).eve_wins[s.id(0, 2)]);
}

TEST(Safety, CreditIsCappedAtVW) {
  EgrArena g = corpus::make_egr_example();
  SafetyArena s = to_safety_game(g, 100);
  EXPECT_EQ(s.cap(), 6);
  EXPECT_EQ(s.c0(), 6);
  std::size_t x = s.id(0, 6);
  ASSERT_EQ(s.end_succ(x) - s.first_succ(x), 1u);
  EXPECT_EQ(s.succ(s.first_succ(x)), s.id(1, 6));
}

TEST(Safety, AlwaysLosingArena) {
  EgrArena g({"a", "b"}, {Owner::kEve, Owner::kAdam},
             {Edge{0, 1, -1, false}, Edge{1, 0, -1, false}});
  SafetyArena s = to_safety_game(g, 4);
  SafetySolution sol = solve_safety(s);
  for (std::size_t x = 0; x < s.num_vertices(); ++x) EXPECT_FALSE(sol.eve_wins[x]);
}

class EgrMethods : public ::testing::TestWithParam<EgrMethod> {
 protected:
  EgrOptions opts() const { return EgrOptions{GetParam(), 2000000}; }
};

TEST_P(EgrMethods, ExampleWinner) {
  EgrArena g = corpus::make_egr_example();
  EXPECT_TRUE(solve_egr(g, 0, 2, opts()));
  EXPECT_FALSE(solve_egr(g, 0, 1, opts()));
  EXPECT_FALSE(solve_egr(g, 0, 0, opts()));
  EXPECT_EQ(minimal_credit(g, 0, opts()), 2);
  EXPECT_EQ(win_region(g, opts()), (std::vector<VertexId>{0, 1, 2}));
  EgrArena plain = g.without_resets();
  for (Weight c = 0; c <= g.credit_cap(); ++c) {
    EXPECT_FALSE(solve_egr(plain, 0, c, opts())) << c;
  }
  EXPECT_FALSE(minimal_credit(plain, 0, opts()).has_value());
}

TEST_P(EgrMethods, SmallArenas) {
  EXPECT_EQ(win_region(single(Owner::kAdam, -1), opts()), std::vector<VertexId>{});
  EXPECT_FALSE(minimal_credit(single(Owner::kAdam, -1), 0, opts()).has_value());
  EXPECT_EQ(minimal_credit(single(Owner::kEve, 0), 0, opts()), 0);
  EgrArena pos({"a", "b"}, {Owner::kEve, Owner::kAdam},
               {Edge{0, 1, 1, false}, Edge{1, 0, 2, false}, Edge{1, 1, 3, false}});
  EXPECT_EQ(win_region(pos, opts()), (std::vector<VertexId>{0, 1}));
  PositionalStrategy st = extract_strategy(single(Owner::kEve, 1), 0, opts());
  for (Weight l = 0; l <= st.cap; ++l) EXPECT_EQ(st.choose(0, l), 0u);
}

TEST_P(EgrMethods, ExampleStrategy) {
  EgrArena g = corpus::make_egr_example();
  PositionalStrategy st = extract_strategy(g, 0, 2, opts());
  EXPECT_EQ(st.choose(0, 2), edge_between(g, 0, 1));
  EXPECT_EQ(st.choose(2, 2), edge_between(g, 2, 0));
  EXPECT_TRUE(oracle::check_strategy_plays(g, st, 0, 2, 12).passed());
  EXPECT_THROW(extract_strategy(g, 0, 1, opts()), PreconditionError);
}

INSTANTIATE_TEST_SUITE_P(Both, EgrMethods,
                         ::testing::Values(EgrMethod::kSafetyReduction,
                                           EgrMethod::kCreditFixpoint),
                         [](const ::testing::TestParamInfo<EgrMethod>& info) {
                           return info.param == EgrMethod::kSafetyReduction
                                      ? std::string("Safety")
                                      : std::string("Fixpoint");
                         });

TEST(EgrRandom, AgreesWithOracleAndIsMonotone) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    std::mt19937_64 rng(testing::kSeedBase + 1000 + i);
    EgrArena g = oracle::random_arena(rng);
    const Weight cap = g.credit_cap();
    for (EgrMethod m : {EgrMethod::kSafetyReduction, EgrMethod::kCreditFixpoint}) {
      EgrOptions o{m, 2000000};
      std::vector<bool> prev(g.num_vertices(), false);
      for (Weight c = 0; c <= cap; ++c) {
        std::vector<bool> mask = win_mask(g, c, o);
        auto table = oracle::brute_egr_table(g, c);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          ASSERT_EQ(mask[v], bool(table[v][std::min<Weight>(c, table[v].size() - 1)]))
              << "seed " << i << " v " << v << " c " << c;
          EXPECT_TRUE(!prev[v] || mask[v]);
        }
        prev = mask;
      }
    }
  }
}

TEST(EgrRandom, SaturationAtVW) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    std::mt19937_64 rng(testing::kSeedBase + 2000 + i);
    EgrArena g = oracle::random_arena(rng);
    std::vector<bool> at_cap = win_mask(g, g.credit_cap());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool some = false;
      for (Weight c = 0; c <= 2 * g.credit_cap() + 1 && !some; ++c) {
        some = oracle::brute_egr(g, v, c);
      }
      EXPECT_EQ(at_cap[v], some) << "seed " << i;
    }
  }
}

TEST(EgrRandom, WithoutResetsMatchesPlainEnergyGame) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    std::mt19937_64 rng(testing::kSeedBase + 3000 + i);
    oracle::RandomArenaParams p;
    p.reset_probability = 0.0;
    EgrArena g = oracle::random_arena(rng, p);
    for (Weight c = 0; c <= g.credit_cap(); ++c) {
      std::vector<bool> mask = win_mask(g, c);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        EXPECT_EQ(mask[v], oracle::brute_egr(g, v, c, {true}));
      }
    }
  }
}

TEST(EgrRandom, FirstCycleGameMatchesSaturatedWinner) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    std::mt19937_64 rng(testing::kSeedBase + 4000 + i);
    EgrArena g = oracle::random_arena(rng);
    std::vector<bool> at_cap = win_mask(g, g.credit_cap());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      EXPECT_EQ(at_cap[v], oracle::brute_first_cycle_game(g, v) == oracle::Player::kEve)
          << "seed " << i << " v " << v;
    }
  }
}

TEST(EgrRandom, StrategiesSurviveAdversarialPlays) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    std::mt19937_64 rng(testing::kSeedBase + 5000 + i);
    EgrArena g = oracle::random_arena(rng);
    for (EgrMethod m : {EgrMethod::kSafetyReduction, EgrMethod::kCreditFixpoint}) {
      EgrOptions o{m, 2000000};
      for (Weight c = 0; c <= g.credit_cap(); ++c) {
        std::vector<bool> mask = win_mask(g, c, o);
        PositionalStrategy st = extract_strategy(g, c, o);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          if (!mask[v]) continue;
          auto rep = oracle::check_strategy_plays(g, st, v, c, 8);
          EXPECT_TRUE(rep.passed()) << "seed " << i << " v " << v << " c " << c << " "
                                    << rep.counterexample;
        }
      }
    }
  }
}

}  // namespace
}  // namespace wadet
