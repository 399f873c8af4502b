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

#include "wadet/deciders.hpp"

#include <deque>
#include <stdexcept>
#include <tuple>

#include "wadet/constructions.hpp"

namespace wadet {

std::string question_name(Question q) {
  switch (q) {
    case Question::kKDelay:
      return "kdelay";
    case Question::kZeroDelay:
      return "zerodelay";
    case Question::kRegret:
      return "regret";
    case Question::kExistsRegret:
      return "regret-any";
    case Question::kSemiAlgorithm:
      return "semidet";
  }
  return "unknown";
}

namespace {

using RKind = RegretVertex::Kind;

struct RegretBuilder {
  const WeightedAutomaton& n;
  const WeightedAutomaton& d;
  bool existential;
  Weight offset;
  const Budget& budget;
  std::vector<std::string> names;
  std::vector<Owner> owners;
  std::vector<Edge> edges;
  std::vector<RegretVertex> labels;
  std::map<std::tuple<int, StateId, StateId, StateId, SymbolId>, VertexId> index;
  std::map<std::pair<StateId, StateId>, VertexId> pairs;
  std::map<std::tuple<StateId, StateId, StateId, SymbolId>, VertexId> choices;
  std::deque<VertexId> queue;

  VertexId intern(RegretVertex lab) {
    auto key = std::make_tuple(static_cast<int>(lab.kind), lab.p, lab.q, lab.q2, lab.a);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (labels.size() >= budget.max_arena) {
      throw BudgetExceeded("regret arena exceeds " + std::to_string(budget.max_arena) +
                           " vertices");
    }
    auto v = static_cast<VertexId>(labels.size());
    index.emplace(key, v);
    labels.push_back(lab);
    Owner owner = Owner::kAdam;
    switch (lab.kind) {
      case RKind::kPair:
        names.push_back("(" + n.state_name(lab.p) + "," + d.state_name(lab.q) + ")");
        pairs.emplace(std::make_pair(lab.p, lab.q), v);
        break;
      case RKind::kChoice:
        names.push_back("(" + n.state_name(lab.p) + "," + d.state_name(lab.q) + "," +
                        d.state_name(lab.q2) + "," + n.symbol_name(lab.a) + ")");
        owner = Owner::kEve;
        choices.emplace(std::make_tuple(lab.p, lab.q, lab.q2, lab.a), v);
        break;
      case RKind::kTop:
        names.push_back("top");
        break;
      case RKind::kBottom:
        names.push_back("bot");
        break;
      case RKind::kRegret1:
        names.push_back("bot_r1");
        break;
      case RKind::kRegret2:
        names.push_back("bot_r2");
        break;
    }
    owners.push_back(owner);
    queue.push_back(v);
    return v;
  }

  VertexId special(RKind k) { return intern(RegretVertex{k, 0, 0, 0, 0}); }

  void expand(VertexId v) {
    const RegretVertex lab = labels[v];
    switch (lab.kind) {
      case RKind::kPair: {
        bool moves = false;
        for (const Transition& t : d.out(lab.q)) {
          moves = true;
          VertexId c = intern(RegretVertex{RKind::kChoice, lab.p, lab.q, t.dst, t.symbol});
          edges.push_back(Edge{v, c, 0, false});
        }
        const bool pf = n.is_final(lab.p), qf = d.is_final(lab.q);
        if (!pf && qf) edges.push_back(Edge{v, special(RKind::kBottom), 0, false});
        if (pf && qf && !existential) {
          edges.push_back(Edge{v, special(RKind::kRegret1), checked_sub(1, offset), false});
        }
        if (!moves) edges.push_back(Edge{v, special(RKind::kTop), 0, false});
        break;
      }
      case RKind::kChoice: {
        const Weight wd = *d.weight(lab.q, lab.a, lab.q2);
        bool any = false;
        for (const Transition& t : n.out(lab.p, lab.a)) {
          any = true;
          VertexId to = intern(RegretVertex{RKind::kPair, t.dst, lab.q2, 0, 0});
          edges.push_back(Edge{v, to, checked_sub(t.weight, wd), false});
        }
        if (!any) edges.push_back(Edge{v, special(RKind::kBottom), 0, false});
        break;
      }
      case RKind::kTop:
        edges.push_back(Edge{v, v, 1, false});
        break;
      case RKind::kBottom:
        edges.push_back(Edge{v, v, -1, false});
        break;
      case RKind::kRegret1:
        edges.push_back(Edge{v, special(RKind::kRegret2), -1, false});
        break;
      case RKind::kRegret2:
        edges.push_back(Edge{v, special(RKind::kRegret1), 1, false});
        break;
    }
  }
};

}  // namespace

RegretGame build_regret_energy_game(const WeightedAutomaton& n,
                                    const WeightedAutomaton& d, Weight r,
                                    bool existential, const Budget& budget) {
  if (!is_deterministic(d)) throw PreconditionError("regret game needs a deterministic D");
  if (n.alphabet() != d.alphabet()) throw InputError("alphabet mismatch");
  if (r < 0) throw PreconditionError("r must be nonnegative");
  const Weight offset = checked_mul(static_cast<Weight>(d.num_states()),
                                    checked_add(max_weight(n), max_weight(d)));
  RegretBuilder b{n, d, existential, offset, budget, {}, {}, {}, {}, {}, {}, {}, {}};
  for (StateId p : n.initial()) b.intern(RegretVertex{RKind::kPair, p, d.initial().front(), 0, 0});
  while (!b.queue.empty()) {
    VertexId v = b.queue.front();
    b.queue.pop_front();
    b.expand(v);
  }
  EgrArena arena(std::move(b.names), std::move(b.owners), std::move(b.edges));
  return RegretGame{std::move(arena), std::move(b.labels), std::move(b.pairs),
                    std::move(b.choices), offset};
}

namespace {

// Mealy machine from a positional choice on the regret arena. Memory 0 is
// the root pair; a trailing dead memory absorbs symbols D cannot read.
MealyMachine strategy_from_choice(const WeightedAutomaton& n,
                                  const WeightedAutomaton& d,
                                  const RegretGame& game,
                                  const std::vector<EdgeId>& choice,
                                  StateId p_init) {
  const StateId q_init = d.initial().front();
  const std::size_t k = n.num_symbols();
  std::map<std::pair<StateId, StateId>, MemoryId> memory;
  std::vector<std::pair<StateId, StateId>> order;
  std::vector<std::pair<MemoryId, StateId>> table;  // (update, output) per slot
  std::deque<MemoryId> queue;
  auto intern = [&](StateId p, StateId q) {
    auto [it, fresh] = memory.emplace(std::make_pair(p, q), static_cast<MemoryId>(order.size()));
    if (fresh) {
      order.emplace_back(p, q);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(p_init, q_init);
  constexpr MemoryId kDead = static_cast<MemoryId>(-1);
  std::vector<std::vector<std::pair<MemoryId, StateId>>> rows;
  while (!queue.empty()) {
    MemoryId m = queue.front();
    queue.pop_front();
    auto [p, q] = order[m];
    std::vector<std::pair<MemoryId, StateId>> row(k, {kDead, p});
    for (SymbolId a = 0; a < k; ++a) {
      auto dt = d.out(q, a);
      if (dt.empty()) continue;
      auto it = game.choice_vertex.find({p, q, dt.front().dst, a});
      if (it == game.choice_vertex.end()) {
        throw std::logic_error("choice vertex missing from the regret arena");
      }
      EdgeId e = choice.at(it->second);
      if (e == kNoEdge) throw std::logic_error("strategy undefined on a winning vertex");
      const RegretVertex& to = game.labels[game.arena.edge(e).dst];
      if (to.kind != RegretVertex::Kind::kPair) {
        throw std::logic_error("winning strategy leaves the pair vertices");
      }
      row[a] = {intern(to.p, to.q), to.p};
    }
    if (rows.size() <= m) rows.resize(m + 1);
    rows[m] = std::move(row);
  }
  const std::size_t live = order.size();
  std::vector<MemoryId> update((live + 1) * k);
  std::vector<StateId> output((live + 1) * k);
  for (std::size_t m = 0; m < live; ++m) {
    for (SymbolId a = 0; a < k; ++a) {
      auto [u, o] = rows[m][a];
      update[m * k + a] = u == kDead ? static_cast<MemoryId>(live) : u;
      output[m * k + a] = o;
    }
  }
  for (SymbolId a = 0; a < k; ++a) {
    update[live * k + a] = static_cast<MemoryId>(live);
    output[live * k + a] = p_init;
  }
  return MealyMachine(live + 1, k, 0, p_init, std::move(update), std::move(output));
}

void attach_witness(Decision& dec, const WeightedAutomaton& base) {
  WeightedAutomaton product = strategy_product(base, *dec.strategy);
  Homomorphism proj = strategy_product_projection(base, *dec.strategy);
  TrimResult tr = trim_with_map(product);
  Homomorphism mu;
  for (StateId s : tr.original) mu.map.push_back(proj.map[s]);
  dec.witness = std::move(tr.automaton);
  dec.witness_projection = std::move(mu);
}

Decision regret_pipeline(const WeightedAutomaton& n, std::optional<Weight> r,
                         const DeciderOptions& opts) {
  Decision dec;
  dec.question = r ? Question::kRegret : Question::kExistsRegret;
  dec.r = r;
  WeightedAutomaton t = trim(n);
  dec.base_states = t.num_states();
  if (t.num_states() == 0) {
    dec.answer = true;
    dec.base = t;
    dec.witness = empty_language_automaton(n.alphabet());
    dec.notes.push_back("empty language: vacuously determinizable");
    if (!r) dec.regret_bound = 0;
    return dec;
  }
  dec.base = t;
  JokerOptions jopts;
  jopts.egr = opts.egr;
  jopts.budget = opts.budget;
  JokerResult jr = joker_win(t, jopts);
  dec.joker_won = jr.won;
  dec.joker_region = jr.region;
  dec.joker_credit = jr.credit;
  dec.arena_vertices = jr.game.arena.num_vertices();
  if (!jr.won) {
    dec.notes.push_back("Eve loses the Joker game");
    return dec;
  }
  const Weight b = joker_bound(jr, opts.joker_bound, opts.egr);
  dec.bound = b;
  WeightedAutomaton det = trim(bounded_determinize(t, b, opts.budget));
  dec.det_states = det.num_states();
  RegretGame game = build_regret_energy_game(t, det, r.value_or(0), !r.has_value(), opts.budget);
  const EgrArena& g = game.arena;
  const Weight credit = r ? checked_add(*r, game.offset) : g.credit_cap();
  CreditSolution sol = solve_credit_fixpoint(g, 0);
  std::vector<bool> mask = win_mask(g, credit, opts.egr);
  const StateId q_init = det.initial().front();
  for (StateId p : t.initial()) {
    VertexId v = game.pair_vertex.at({p, q_init});
    const bool by_fixpoint = sol.credit[v] && *sol.credit[v] <= credit;
    if (by_fixpoint != mask[v]) {
      throw std::logic_error("energy solvers disagree on the regret arena");
    }
    if (by_fixpoint && !dec.answer) {
      dec.answer = true;
      dec.initial_choice = p;
      dec.energy_credit = *sol.credit[v];
    }
  }
  if (!dec.answer) {
    dec.notes.push_back("Adam wins the regret energy game from every initial pair");
    return dec;
  }
  if (!r) dec.regret_bound = dec.energy_credit;
  dec.strategy = strategy_from_choice(t, det, game, sol.choice, *dec.initial_choice);
  attach_witness(dec, t);
  return dec;
}

}  // namespace

Decision decide_r_regret(const WeightedAutomaton& n, Weight r,
                         const DeciderOptions& opts) {
  if (r < 0) throw PreconditionError("r must be nonnegative");
  return regret_pipeline(n, r, opts);
}

Decision decide_exists_regret(const WeightedAutomaton& n,
                              const DeciderOptions& opts) {
  return regret_pipeline(n, std::nullopt, opts);
}

Decision decide_0_delay(const WeightedAutomaton& n, const DeciderOptions& opts) {
  WeightedAutomaton t = trim(n);
  Decision dec;
  if (t.num_states() == 0) {
    dec = regret_pipeline(t, 0, opts);
  } else {
    dec = regret_pipeline(pair_determinize(t, opts.budget), 0, opts);
  }
  dec.question = Question::kZeroDelay;
  dec.k = 0;
  return dec;
}

Decision decide_k_delay(const WeightedAutomaton& n, unsigned k,
                        const DeciderOptions& opts) {
  WeightedAutomaton t = trim(n);
  Decision dec;
  if (t.num_states() == 0) {
    dec = regret_pipeline(t, 0, opts);
  } else {
    dec = regret_pipeline(delay_subset_construct(t, k, opts.budget), 0, opts);
  }
  dec.question = Question::kKDelay;
  dec.k = k;
  return dec;
}

Decision semialgorithm_determinize(const WeightedAutomaton& n, unsigned k_max,
                                   const DeciderOptions& opts) {
  Decision last;
  for (unsigned k = 0; k <= k_max; ++k) {
    last = decide_k_delay(n, k, opts);
    if (last.answer) {
      last.question = Question::kSemiAlgorithm;
      return last;
    }
  }
  last.question = Question::kSemiAlgorithm;
  last.k.reset();
  last.notes.push_back("no determinizer with delay <= " + std::to_string(k_max));
  return last;
}

}  // namespace wadet
