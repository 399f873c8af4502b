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

#include <algorithm>
#include <deque>
#include <tuple>

#include "wadet/constructions.hpp"
#include "wadet/deciders.hpp"

namespace wadet {

namespace {

using Kind = JokerVertex::Kind;

struct Builder {
  const WeightedAutomaton& n;
  const Budget& budget;
  std::vector<std::string> names;
  std::vector<Owner> owners;
  std::vector<Edge> edges;
  std::vector<JokerVertex> labels;
  std::map<std::tuple<int, StateId, StateId, StateId, SymbolId>, VertexId> index;
  std::map<std::pair<StateId, StateId>, VertexId> pairs;
  std::deque<VertexId> queue;

  VertexId intern(JokerVertex lab) {
    auto key = std::make_tuple(static_cast<int>(lab.kind), lab.p, lab.q, lab.p2, lab.a);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (labels.size() >= budget.max_arena) {
      throw BudgetExceeded("Joker arena exceeds " + std::to_string(budget.max_arena) +
                           " vertices");
    }
    auto v = static_cast<VertexId>(labels.size());
    index.emplace(key, v);
    labels.push_back(lab);
    switch (lab.kind) {
      case Kind::kPair:
        names.push_back("(" + n.state_name(lab.p) + "," + n.state_name(lab.q) + ")");
        owners.push_back(Owner::kAdam);
        pairs.emplace(std::make_pair(lab.p, lab.q), v);
        break;
      case Kind::kChoice:
        names.push_back("(" + n.state_name(lab.p) + "," + n.state_name(lab.q) + "," +
                        n.symbol_name(lab.a) + ")");
        owners.push_back(Owner::kEve);
        break;
      case Kind::kResponse:
        names.push_back("(" + n.state_name(lab.p) + "," + n.state_name(lab.q) + "," +
                        n.state_name(lab.p2) + "," + n.symbol_name(lab.a) + ")");
        owners.push_back(Owner::kAdam);
        break;
      case Kind::kBottom:
        names.push_back("bot");
        owners.push_back(Owner::kEve);
        break;
    }
    queue.push_back(v);
    return v;
  }

  VertexId pair(StateId p, StateId q) {
    return intern(JokerVertex{Kind::kPair, p, q, 0, 0});
  }
  VertexId bottom() { return intern(JokerVertex{Kind::kBottom, 0, 0, 0, 0}); }

  void expand(VertexId v) {
    const JokerVertex lab = labels[v];
    switch (lab.kind) {
      case Kind::kPair: {
        const std::size_t before = edges.size();
        bool stuck = false;
        for (SymbolId a = 0; a < n.num_symbols(); ++a) {
          if (n.out(lab.q, a).empty()) continue;
          if (n.out(lab.p, a).empty()) {
            stuck = true;
          } else {
            VertexId c = intern(JokerVertex{Kind::kChoice, lab.p, lab.q, 0, a});
            edges.push_back(Edge{v, c, 0, false});
          }
        }
        if (stuck || (!n.is_final(lab.p) && n.is_final(lab.q))) {
          edges.push_back(Edge{v, bottom(), 0, false});
        }
        // Adam has no move left and Eve has not lost.
        if (edges.size() == before) edges.push_back(Edge{v, v, 0, false});
        break;
      }
      case Kind::kChoice:
        for (const Transition& t : n.out(lab.p, lab.a)) {
          VertexId r = intern(JokerVertex{Kind::kResponse, lab.p, lab.q, t.dst, lab.a});
          edges.push_back(Edge{v, r, 0, false});
        }
        break;
      case Kind::kResponse: {
        const Weight wp = *n.weight(lab.p, lab.a, lab.p2);
        for (const Transition& u : n.out(lab.q, lab.a)) {
          edges.push_back(Edge{v, pair(lab.p2, u.dst), checked_sub(wp, u.weight), false});
        }
        for (const Transition& u : n.out(lab.p, lab.a)) {
          edges.push_back(Edge{v, pair(lab.p2, u.dst), checked_sub(wp, u.weight), true});
        }
        break;
      }
      case Kind::kBottom:
        edges.push_back(Edge{v, v, -1, false});
        break;
    }
  }

  void run() {
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      expand(v);
    }
  }
};

JokerGame build_on_trim(const WeightedAutomaton& t,
                        const std::vector<std::pair<StateId, StateId>>& roots,
                        bool with_bottom, const Budget& budget) {
  if (t.num_states() == 0) {
    throw PreconditionError("automaton has an empty language");
  }
  Builder b{t, budget, {}, {}, {}, {}, {}, {}, {}};
  for (auto [p, q] : roots) {
    if (p >= t.num_states() || q >= t.num_states()) {
      throw InputError("root pair references an unknown state");
    }
    b.pair(p, q);
  }
  if (with_bottom) b.bottom();
  b.run();
  EgrArena arena(std::move(b.names), std::move(b.owners), std::move(b.edges));
  return JokerGame{t, std::move(arena), std::move(b.labels), std::move(b.pairs)};
}

}  // namespace

std::optional<VertexId> JokerGame::vertex_of(StateId p, StateId q) const {
  auto it = pair_vertex.find({p, q});
  if (it == pair_vertex.end()) return std::nullopt;
  return it->second;
}

JokerGame build_joker_game(const WeightedAutomaton& n, const Budget& budget) {
  WeightedAutomaton t = trim(n);
  std::vector<std::pair<StateId, StateId>> roots;
  for (StateId p = 0; p < t.num_states(); ++p) {
    for (StateId q = 0; q < t.num_states(); ++q) roots.emplace_back(p, q);
  }
  return build_on_trim(t, roots, true, budget);
}

JokerGame build_joker_game(const WeightedAutomaton& n,
                           const std::vector<std::pair<StateId, StateId>>& roots,
                           const Budget& budget) {
  return build_on_trim(trim(n), roots, false, budget);
}

JokerResult joker_win(const WeightedAutomaton& n, const JokerOptions& opts) {
  WeightedAutomaton t = trim(n);
  if (t.num_states() == 0) {
    throw PreconditionError("automaton has an empty language");
  }
  std::vector<std::pair<StateId, StateId>> roots;
  for (StateId p : t.initial()) {
    for (StateId q : t.initial()) roots.emplace_back(p, q);
  }
  JokerResult res{.game = opts.scope == JokerScope::kFull
                              ? build_joker_game(t, opts.budget)
                              : build_on_trim(t, roots, false, opts.budget)};
  const EgrArena& g = res.game.arena;
  res.credit = g.credit_cap();
  std::vector<bool> mask = win_mask(g, res.credit, opts.egr);
  for (const auto& [pq, v] : res.game.pair_vertex) {
    if (mask[v]) res.region.push_back(pq);
  }
  for (StateId p : t.initial()) {
    bool all = true;
    for (StateId q : t.initial()) {
      all = all && mask[*res.game.vertex_of(p, q)];
    }
    if (all) {
      res.won = true;
      res.initial_choice = p;
      break;
    }
  }
  if (opts.compute_credits) {
    for (const auto& pq : res.region) {
      auto c = minimal_credit(g, *res.game.vertex_of(pq.first, pq.second), opts.egr);
      if (c) res.credits.emplace(pq, *c);
    }
  }
  return res;
}

Weight joker_bound(const JokerResult& jr, JokerBound policy,
                   const EgrOptions& egr) {
  if (policy == JokerBound::kArenaCap) return checked_mul(2, jr.credit);
  std::vector<VertexId> targets;
  for (const auto& pq : jr.region) targets.push_back(*jr.game.vertex_of(pq.first, pq.second));
  auto c = least_common_credit(jr.game.arena, targets, egr);
  return checked_mul(2, c.value_or(jr.credit));
}

DeterminizeResult determinize_via_joker_detailed(const WeightedAutomaton& n,
                                                 JokerBound policy,
                                                 const JokerOptions& opts) {
  JokerResult jr = joker_win(n, opts);
  if (!jr.won) {
    throw PreconditionError("Joker game lost: not regret-determinizable, no bound available");
  }
  Weight b = joker_bound(jr, policy, opts.egr);
  return DeterminizeResult{bounded_determinize(jr.game.automaton, b, opts.budget), b};
}

WeightedAutomaton determinize_via_joker(const WeightedAutomaton& n,
                                        JokerBound policy,
                                        const JokerOptions& opts) {
  return determinize_via_joker_detailed(n, policy, opts).automaton;
}

}  // namespace wadet
