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

#include "wadet/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace wadet {

bool is_run(const WeightedAutomaton& n, const Run& r) {
  if (r.states.size() != r.word.size() + 1) return false;
  for (StateId q : r.states) {
    if (q >= n.num_states()) return false;
  }
  for (std::size_t i = 0; i < r.word.size(); ++i) {
    if (r.word[i] >= n.num_symbols()) return false;
    if (!n.weight(r.states[i], r.word[i], r.states[i + 1])) return false;
  }
  return true;
}

Weight run_value(const WeightedAutomaton& n, const Run& r) {
  if (!is_run(n, r)) throw PreconditionError("not a run of the automaton");
  Weight sum = 0;
  for (std::size_t i = 0; i < r.word.size(); ++i) {
    sum = checked_add(sum, *n.weight(r.states[i], r.word[i], r.states[i + 1]));
  }
  return sum;
}

bool is_accepting(const WeightedAutomaton& n, const Run& r) {
  return is_run(n, r) && n.is_initial(r.states.front()) &&
         n.is_final(r.states.back());
}

ExtendedWeight evaluate(const WeightedAutomaton& n, const Word& w,
                        std::optional<std::size_t> max_len) {
  if (max_len && w.size() > *max_len) {
    throw InputError("word longer than the configured limit");
  }
  for (SymbolId a : w) {
    if (a >= n.num_symbols()) throw InputError("symbol outside the alphabet");
  }
  std::vector<std::optional<Weight>> layer(n.num_states());
  for (StateId q : n.initial()) layer[q] = 0;
  std::vector<std::optional<Weight>> next(n.num_states());
  for (SymbolId a : w) {
    std::fill(next.begin(), next.end(), std::nullopt);
    for (StateId p = 0; p < n.num_states(); ++p) {
      if (!layer[p]) continue;
      for (const Transition& t : n.out(p, a)) {
        Weight v = checked_add(*layer[p], t.weight);
        if (!next[t.dst] || *next[t.dst] < v) next[t.dst] = v;
      }
    }
    layer.swap(next);
  }
  ExtendedWeight best;
  for (StateId q : n.final_states()) {
    if (layer[q]) best = max(best, ExtendedWeight(*layer[q]));
  }
  return best;
}

bool is_deterministic(const WeightedAutomaton& n) {
  if (n.initial().size() != 1) return false;
  for (StateId q = 0; q < n.num_states(); ++q) {
    for (SymbolId a = 0; a < n.num_symbols(); ++a) {
      if (n.out(q, a).size() > 1) return false;
    }
  }
  return true;
}

bool is_pair_deterministic(const WeightedAutomaton& n) {
  if (n.initial().size() != 1) return false;
  for (StateId q = 0; q < n.num_states(); ++q) {
    for (SymbolId a = 0; a < n.num_symbols(); ++a) {
      std::set<Weight> seen;
      for (const Transition& t : n.out(q, a)) {
        if (!seen.insert(t.weight).second) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<bool> forward_reachable(const WeightedAutomaton& n) {
  std::vector<bool> seen(n.num_states(), false);
  std::vector<StateId> stack;
  for (StateId q : n.initial()) {
    seen[q] = true;
    stack.push_back(q);
  }
  while (!stack.empty()) {
    StateId p = stack.back();
    stack.pop_back();
    for (const Transition& t : n.out(p)) {
      if (!seen[t.dst]) {
        seen[t.dst] = true;
        stack.push_back(t.dst);
      }
    }
  }
  return seen;
}

std::vector<bool> backward_reachable(const WeightedAutomaton& n) {
  std::vector<std::vector<StateId>> pred(n.num_states());
  for (const Transition& t : n.transitions()) pred[t.dst].push_back(t.src);
  std::vector<bool> seen(n.num_states(), false);
  std::vector<StateId> stack;
  for (StateId q : n.final_states()) {
    seen[q] = true;
    stack.push_back(q);
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : pred[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

TrimResult trim_with_map(const WeightedAutomaton& n) {
  std::vector<bool> fwd = forward_reachable(n);
  std::vector<bool> bwd = backward_reachable(n);
  std::vector<StateId> original;
  std::vector<StateId> renum(n.num_states(), 0);
  std::vector<std::string> names;
  for (StateId q = 0; q < n.num_states(); ++q) {
    if (fwd[q] && bwd[q]) {
      renum[q] = static_cast<StateId>(original.size());
      original.push_back(q);
      names.push_back(n.state_name(q));
    }
  }
  auto keep = [&](StateId q) { return fwd[q] && bwd[q]; };
  std::vector<StateId> init, fin;
  for (StateId q : n.initial()) {
    if (keep(q)) init.push_back(renum[q]);
  }
  for (StateId q : n.final_states()) {
    if (keep(q)) fin.push_back(renum[q]);
  }
  std::vector<Transition> ts;
  for (const Transition& t : n.transitions()) {
    if (keep(t.src) && keep(t.dst)) {
      ts.push_back(Transition{renum[t.src], t.symbol, t.weight, renum[t.dst]});
    }
  }
  return TrimResult{WeightedAutomaton(n.alphabet(), std::move(names),
                                      std::move(init), std::move(fin),
                                      std::move(ts)),
                    std::move(original)};
}

WeightedAutomaton trim(const WeightedAutomaton& n) {
  return trim_with_map(n).automaton;
}

bool is_trim(const WeightedAutomaton& n) {
  std::vector<bool> fwd = forward_reachable(n);
  std::vector<bool> bwd = backward_reachable(n);
  for (StateId q = 0; q < n.num_states(); ++q) {
    if (!fwd[q] || !bwd[q]) return false;
  }
  return true;
}

std::optional<Word> find_k_inclusion_violation(const WeightedAutomaton& d,
                                               const WeightedAutomaton& n,
                                               unsigned k,
                                               std::size_t horizon) {
  if (d.alphabet() != n.alphabet()) throw InputError("alphabet mismatch");
  const auto bound = static_cast<Weight>(k);
  // A configuration follows one run of D: its current state, the word read so
  // far and every (N state, sum_D - sum_N) still within the delay bound.
  struct Config {
    StateId state;
    Word word;
    std::set<std::pair<StateId, Weight>> matches;
  };
  auto ok = [&](const Config& c) {
    if (!d.is_final(c.state)) return true;
    for (const auto& [q, diff] : c.matches) {
      if (diff == 0 && n.is_final(q)) return true;
    }
    return false;
  };
  std::vector<Config> layer;
  for (StateId p : d.initial()) {
    Config c{p, {}, {}};
    for (StateId q : n.initial()) c.matches.insert({q, 0});
    if (!ok(c)) return c.word;
    layer.push_back(std::move(c));
  }
  for (std::size_t len = 1; len <= horizon && !layer.empty(); ++len) {
    std::vector<Config> next;
    std::set<std::pair<StateId, std::set<std::pair<StateId, Weight>>>> dedup;
    for (const Config& c : layer) {
      for (const Transition& t : d.out(c.state)) {
        Config nc{t.dst, c.word, {}};
        nc.word.push_back(t.symbol);
        for (const auto& [q, diff] : c.matches) {
          for (const Transition& u : n.out(q, t.symbol)) {
            Weight nd = checked_sub(checked_add(diff, t.weight), u.weight);
            if (nd >= -bound && nd <= bound) nc.matches.insert({u.dst, nd});
          }
        }
        if (!ok(nc)) return nc.word;
        if (dedup.insert({nc.state, nc.matches}).second) {
          next.push_back(std::move(nc));
        }
      }
    }
    layer.swap(next);
  }
  return std::nullopt;
}

bool check_k_inclusion(const WeightedAutomaton& d, const WeightedAutomaton& n,
                       unsigned k, std::size_t horizon) {
  return !find_k_inclusion_violation(d, n, k, horizon).has_value();
}

bool check_homomorphism(const Homomorphism& mu, const WeightedAutomaton& d,
                        const WeightedAutomaton& n) {
  if (d.alphabet() != n.alphabet()) return false;
  if (mu.map.size() != d.num_states()) return false;
  for (StateId q : mu.map) {
    if (q >= n.num_states()) return false;
  }
  for (StateId q : d.initial()) {
    if (!n.is_initial(mu.map[q])) return false;
  }
  for (StateId q : d.final_states()) {
    if (!n.is_final(mu.map[q])) return false;
  }
  for (const Transition& t : d.transitions()) {
    auto image = n.out(mu.map[t.src], t.symbol);
    bool found = std::any_of(image.begin(), image.end(), [&](const Transition& u) {
      return u.dst == mu.map[t.dst] && u.weight == t.weight;
    });
    if (!found) return false;
  }
  return true;
}

namespace {

struct ProductBuild {
  std::vector<std::string> names;
  std::vector<StateId> projection;
  std::vector<StateId> final_states;
  std::vector<Transition> transitions;
};

ProductBuild build_strategy_product(const WeightedAutomaton& n,
                                    const MealyMachine& m) {
  if (m.num_symbols() != n.num_symbols()) {
    throw InputError("Mealy machine and automaton disagree on the alphabet");
  }
  if (m.initial_output() >= n.num_states()) {
    throw InputError("Mealy output is not a state of the automaton");
  }
  ProductBuild out;
  std::map<std::pair<StateId, MemoryId>, StateId> index;
  std::deque<std::pair<StateId, MemoryId>> queue;
  auto intern = [&](StateId q, MemoryId s) {
    auto [it, fresh] =
        index.emplace(std::make_pair(q, s), static_cast<StateId>(index.size()));
    if (fresh) {
      out.names.push_back("(" + n.state_name(q) + "," + std::to_string(s) + ")");
      out.projection.push_back(q);
      if (n.is_final(q)) out.final_states.push_back(it->second);
      queue.emplace_back(q, s);
    }
    return it->second;
  };
  intern(m.initial_output(), m.initial_memory());
  while (!queue.empty()) {
    auto [q, s] = queue.front();
    queue.pop_front();
    StateId from = index.at({q, s});
    for (SymbolId a = 0; a < n.num_symbols(); ++a) {
      StateId q2 = m.output(s, a);
      if (q2 >= n.num_states()) {
        throw InputError("Mealy output is not a state of the automaton");
      }
      auto w = n.weight(q, a, q2);
      if (!w) continue;
      StateId to = intern(q2, m.update(s, a));
      out.transitions.push_back(Transition{from, a, *w, to});
    }
  }
  return out;
}

}  // namespace

WeightedAutomaton strategy_product(const WeightedAutomaton& n,
                                   const MealyMachine& m) {
  ProductBuild b = build_strategy_product(n, m);
  return WeightedAutomaton(n.alphabet(), std::move(b.names), {0},
                           std::move(b.final_states), std::move(b.transitions));
}

Homomorphism strategy_product_projection(const WeightedAutomaton& n,
                                         const MealyMachine& m) {
  return Homomorphism{build_strategy_product(n, m).projection};
}

WeightedAutomaton difference_product(const WeightedAutomaton& n,
                                     const WeightedAutomaton& d) {
  if (!is_deterministic(d)) throw PreconditionError("difference_product needs a deterministic D");
  if (n.alphabet() != d.alphabet()) throw InputError("alphabet mismatch");
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::deque<std::pair<StateId, StateId>> queue;
  std::vector<std::string> names;
  std::vector<StateId> init, fin;
  std::vector<Transition> ts;
  auto intern = [&](StateId p, StateId q) {
    auto [it, fresh] =
        index.emplace(std::make_pair(p, q), static_cast<StateId>(index.size()));
    if (fresh) {
      names.push_back("(" + n.state_name(p) + "," + d.state_name(q) + ")");
      if (n.is_final(p) && d.is_final(q)) fin.push_back(it->second);
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  const StateId qi = d.initial().front();
  for (StateId p : n.initial()) init.push_back(intern(p, qi));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    StateId from = index.at({p, q});
    for (SymbolId a = 0; a < n.num_symbols(); ++a) {
      auto dq = d.out(q, a);
      if (dq.empty()) continue;
      for (const Transition& t : n.out(p, a)) {
        StateId to = intern(t.dst, dq.front().dst);
        ts.push_back(Transition{from, a, checked_sub(t.weight, dq.front().weight), to});
      }
    }
  }
  return WeightedAutomaton(n.alphabet(), std::move(names), std::move(init),
                           std::move(fin), std::move(ts));
}

WeightedAutomaton scale(const WeightedAutomaton& n, Weight x) {
  if (x <= 0) throw PreconditionError("scale factor must be positive");
  std::vector<Transition> ts(n.transitions().begin(), n.transitions().end());
  for (Transition& t : ts) t.weight = checked_mul(t.weight, x);
  return WeightedAutomaton(n.alphabet(), n.state_names(), n.initial(),
                           n.final_states(), std::move(ts));
}

Weight gamma(Weight x, unsigned k) {
  const Weight m = 4 * static_cast<Weight>(k) + 1;
  const Weight num = checked_add(x, 2 * static_cast<Weight>(k));
  Weight q = num / m;
  if (num % m != 0 && num < 0) --q;  // floor division
  return q;
}

WeightedAutomaton gamma_round(const WeightedAutomaton& d, unsigned k) {
  std::vector<Transition> ts(d.transitions().begin(), d.transitions().end());
  for (Transition& t : ts) t.weight = gamma(t.weight, k);
  return WeightedAutomaton(d.alphabet(), d.state_names(), d.initial(),
                           d.final_states(), std::move(ts));
}

Weight max_weight(const WeightedAutomaton& n) {
  Weight m = 0;
  for (const Transition& t : n.transitions()) {
    Weight a = t.weight < 0 ? checked_sub(0, t.weight) : t.weight;
    m = std::max(m, a);
  }
  return m;
}

WeightedAutomaton empty_language_automaton(const std::vector<std::string>& alphabet) {
  return WeightedAutomaton(alphabet, {"empty"}, {0}, {}, {});
}

}  // namespace wadet
